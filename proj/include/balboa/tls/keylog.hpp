// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <mutex>
#include <string_view>
#include <variant>

#include "balboa/bytes.hpp"
#include "balboa/tls/secrets.hpp"

namespace balboa::tls {

enum class KeylogError { BadLabel, BadHexLength, BadHexDigit };

struct KeylogEntry {
    std::array<uint8_t, kRandomLen> client_random;
    std::array<uint8_t, kMasterSecretLen> master_secret;
};

// Parses one line of the de-facto key-log format:
//   CLIENT_RANDOM <64 hex> <96 hex>
std::variant<KeylogEntry, KeylogError> parse_keylog_line(std::string_view line);

// Secrets published by the key-log reader, looked up by client random.
// Concurrent: one reader thread publishes, any session thread queries.
class KeylogStore {
 public:
    void publish(const KeylogEntry& entry);
    // Feed raw key-log bytes; splits lines, ignores malformed ones.
    void ingest(std::string_view chunk);
    std::optional<std::array<uint8_t, kMasterSecretLen>> lookup(
        const std::array<uint8_t, kRandomLen>& client_random) const;

 private:
    mutable std::mutex mu_;
    std::map<std::array<uint8_t, kRandomLen>, std::array<uint8_t, kMasterSecretLen>> secrets_;
    std::string partial_line_;
};

}  // namespace balboa::tls
