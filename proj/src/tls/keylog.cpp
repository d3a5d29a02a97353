// SPDX-License-Identifier: Apache-2.0
#include "balboa/tls/keylog.hpp"

namespace balboa::tls {
namespace {

constexpr std::string_view kLabel = "CLIENT_RANDOM";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// len must be exactly 2*out_len hex digits followed by end-of-field.
std::optional<KeylogError> parse_hex_field(std::string_view field, uint8_t* out,
                                           size_t out_len) {
    if (field.size() != 2 * out_len) return KeylogError::BadHexLength;
    for (size_t i = 0; i < out_len; ++i) {
        const int hi = hex_nibble(field[2 * i]);
        const int lo = hex_nibble(field[2 * i + 1]);
        if (hi < 0 || lo < 0) return KeylogError::BadHexDigit;
        out[i] = static_cast<uint8_t>(hi << 4 | lo);
    }
    return std::nullopt;
}

}  // namespace

std::variant<KeylogEntry, KeylogError> parse_keylog_line(std::string_view line) {
    if (line.size() < kLabel.size() + 1 || line.substr(0, kLabel.size()) != kLabel ||
        line[kLabel.size()] != ' ')
        return KeylogError::BadLabel;
    std::string_view rest = line.substr(kLabel.size() + 1);

    const size_t space = rest.find(' ');
    if (space == std::string_view::npos) return KeylogError::BadHexLength;
    std::string_view rand_hex = rest.substr(0, space);
    std::string_view secret_hex = rest.substr(space + 1);

    KeylogEntry entry;
    if (auto err = parse_hex_field(rand_hex, entry.client_random.data(), kRandomLen)) return *err;
    if (auto err = parse_hex_field(secret_hex, entry.master_secret.data(), kMasterSecretLen))
        return *err;
    return entry;
}

void KeylogStore::publish(const KeylogEntry& entry) {
    std::lock_guard lock(mu_);
    secrets_[entry.client_random] = entry.master_secret;
}

void KeylogStore::ingest(std::string_view chunk) {
    std::lock_guard lock(mu_);
    partial_line_.append(chunk);
    size_t start = 0;
    for (;;) {
        const size_t nl = partial_line_.find('\n', start);
        if (nl == std::string::npos) break;
        std::string_view line(partial_line_.data() + start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto parsed = parse_keylog_line(line); std::holds_alternative<KeylogEntry>(parsed)) {
            const auto& entry = std::get<KeylogEntry>(parsed);
            secrets_[entry.client_random] = entry.master_secret;
        }
        start = nl + 1;
    }
    partial_line_.erase(0, start);
}

std::optional<std::array<uint8_t, kMasterSecretLen>> KeylogStore::lookup(
    const std::array<uint8_t, kRandomLen>& client_random) const {
    std::lock_guard lock(mu_);
    const auto it = secrets_.find(client_random);
    if (it == secrets_.end()) return std::nullopt;
    return it->second;
}

}  // namespace balboa::tls
