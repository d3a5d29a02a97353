// SPDX-License-Identifier: Apache-2.0
#include "balboa/model/web_model.hpp"

#include <filesystem>
#include <fstream>

#include "balboa/crypto/blake3.hpp"

namespace balboa::model {
namespace fs = std::filesystem;

std::string normalize_uri(std::string_view uri) {
    const size_t hash = uri.find('#');
    if (hash != std::string_view::npos) uri = uri.substr(0, hash);
    return std::string(uri);
}

std::shared_ptr<const WebAssetModel> WebAssetModel::load_dir(const std::string& root) {
    std::map<std::string, Bytes> assets;
    std::error_code ec;
    for (fs::recursive_directory_iterator it(root, ec), end; it != end && !ec;
         it.increment(ec)) {
        if (!it->is_regular_file()) continue;
        const std::string rel = fs::relative(it->path(), root).generic_string();
        std::ifstream in(it->path(), std::ios::binary);
        Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        assets["/" + rel] = std::move(data);
    }
    if (ec) return nullptr;
    return from_assets(std::move(assets));
}

std::shared_ptr<const WebAssetModel> WebAssetModel::from_assets(
    std::map<std::string, Bytes> assets) {
    auto model = std::shared_ptr<WebAssetModel>(new WebAssetModel);
    for (auto& [uri, data] : assets) model->assets_[normalize_uri(uri)] = std::move(data);
    model->finalize();
    return model;
}

void WebAssetModel::finalize() {
    // Root digest covers (uri, asset digest) pairs in map order.
    Bytes acc;
    for (const auto& [uri, data] : assets_) {
        acc.insert(acc.end(), uri.begin(), uri.end());
        acc.push_back(0);
        uint8_t digest[32];
        crypto::blake3_hash(data, digest, 32);
        acc.insert(acc.end(), digest, digest + 32);
    }
    uint8_t digest[32];
    crypto::blake3_hash(acc, digest, 32);
    root_digest_ = hex_encode({digest, 32});
}

const Bytes* WebAssetModel::find(std::string_view uri) const {
    const auto it = assets_.find(normalize_uri(uri));
    return it == assets_.end() ? nullptr : &it->second;
}

std::variant<Bytes, LookupError> WebAssetModel::lookup_asset(
    std::string_view uri, std::optional<std::pair<size_t, size_t>> range) const {
    const Bytes* asset = find(uri);
    if (!asset) return LookupError::NotFound;
    if (!range) return *asset;
    const auto [offset, len] = *range;
    if (offset + len > asset->size() || offset + len < offset) return LookupError::RangeError;
    return Bytes(asset->begin() + static_cast<long>(offset),
                 asset->begin() + static_cast<long>(offset + len));
}

std::vector<AssetInfo> WebAssetModel::manifest() const {
    std::vector<AssetInfo> out;
    out.reserve(assets_.size());
    for (const auto& [uri, data] : assets_) {
        uint8_t digest[32];
        crypto::blake3_hash(data, digest, 32);
        out.push_back({uri, data.size(), hex_encode({digest, 32})});
    }
    return out;
}

}  // namespace balboa::model
