// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "balboa/bytes.hpp"

namespace balboa::model {

// Strips the fragment; keeps the query string; no percent-decoding.
std::string normalize_uri(std::string_view uri);

struct AssetInfo {
    std::string uri;
    size_t length;
    std::string digest_hex;  // BLAKE3-256 of the asset bytes
};

enum class LookupError { NotFound, RangeError };

// Pre-shared web cover content: request URI -> asset bytes. Immutable after
// load; URI "/x/y" maps to file x/y under the root directory.
class WebAssetModel {
 public:
    static std::shared_ptr<const WebAssetModel> load_dir(const std::string& root);
    static std::shared_ptr<const WebAssetModel> from_assets(std::map<std::string, Bytes> assets);

    // Full asset or the [offset, offset+len) slice.
    std::variant<Bytes, LookupError> lookup_asset(
        std::string_view uri, std::optional<std::pair<size_t, size_t>> range = std::nullopt) const;

    // nullptr when the URI is absent; spans stay valid while the model lives.
    const Bytes* find(std::string_view uri) const;

    const std::map<std::string, Bytes>& assets() const { return assets_; }
    std::vector<AssetInfo> manifest() const;
    const std::string& root_digest_hex() const { return root_digest_; }

 private:
    WebAssetModel() = default;
    void finalize();

    std::map<std::string, Bytes> assets_;
    std::string root_digest_;
};

}  // namespace balboa::model
