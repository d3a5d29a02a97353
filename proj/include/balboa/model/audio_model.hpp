// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "balboa/bytes.hpp"

namespace balboa::model {

// Exact-substring index over a byte sequence (suffix array, built once).
class SuffixIndex {
 public:
    SuffixIndex() = default;
    explicit SuffixIndex(ByteSpan text);

    // All start offsets of `needle` in the text, ascending.
    std::vector<uint32_t> find_all(ByteSpan needle) const;

 private:
    ByteSpan text_;
    std::vector<uint32_t> sa_;
};

// Pre-shared audio cover content: the concatenated Ogg page bodies of the
// model file, indexed for prefix search. Immutable after load.
class AudioModel {
 public:
    // file: a complete Ogg container. Returns nullptr on malformed input.
    static std::shared_ptr<const AudioModel> load(ByteSpan file);
    // The raw body stream is useful for synthetic models in tests.
    static std::shared_ptr<const AudioModel> from_body_stream(Bytes body);

    const Bytes& body_stream() const { return body_; }
    size_t total_len() const { return body_.size(); }

    // All occurrences of prefix, hint (when it matches) promoted to the front.
    // prefix must be non-empty.
    std::vector<uint32_t> find_candidates(ByteSpan prefix,
                                          std::optional<uint32_t> hint = std::nullopt) const;

    // True when model bytes [offset, offset+len) exist and equal `data`.
    bool matches_at(uint32_t offset, ByteSpan data) const;
    // Read-only view, valid while the model lives. offset+len must be in range.
    ByteSpan slice(uint32_t offset, size_t len) const;
    bool in_range(uint32_t offset, size_t len) const {
        return static_cast<uint64_t>(offset) + len <= body_.size();
    }

 private:
    AudioModel() = default;
    Bytes body_;
    SuffixIndex index_;
};

}  // namespace balboa::model
