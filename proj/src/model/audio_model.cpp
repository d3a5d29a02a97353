// SPDX-License-Identifier: Apache-2.0
#include "balboa/model/audio_model.hpp"

#include <algorithm>
#include <cstring>

#include "balboa/ogg/page.hpp"

namespace balboa::model {

SuffixIndex::SuffixIndex(ByteSpan text) : text_(text) {
    const size_t n = text.size();
    sa_.resize(n);
    for (size_t i = 0; i < n; ++i) sa_[i] = static_cast<uint32_t>(i);

    // prefix-doubling rank sort
    std::vector<int32_t> rank(n), tmp(n);
    for (size_t i = 0; i < n; ++i) rank[i] = text[i];
    for (size_t k = 1; k < n; k *= 2) {
        auto cmp = [&](uint32_t a, uint32_t b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            const int32_t ra = a + k < n ? rank[a + k] : -1;
            const int32_t rb = b + k < n ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa_.begin(), sa_.end(), cmp);
        tmp[sa_[0]] = 0;
        for (size_t i = 1; i < n; ++i)
            tmp[sa_[i]] = tmp[sa_[i - 1]] + (cmp(sa_[i - 1], sa_[i]) ? 1 : 0);
        rank = tmp;
        if (rank[sa_[n - 1]] == static_cast<int32_t>(n - 1)) break;
    }
}

std::vector<uint32_t> SuffixIndex::find_all(ByteSpan needle) const {
    std::vector<uint32_t> out;
    if (needle.empty() || sa_.empty()) return out;
    auto suffix_less_than_needle = [&](uint32_t pos) {
        const size_t len = std::min(needle.size(), text_.size() - pos);
        const int c = std::memcmp(text_.data() + pos, needle.data(), len);
        if (c != 0) return c < 0;
        return len < needle.size();  // shorter suffix sorts before its extension
    };
    auto lo = std::partition_point(sa_.begin(), sa_.end(), suffix_less_than_needle);
    for (auto it = lo; it != sa_.end(); ++it) {
        const uint32_t pos = *it;
        if (text_.size() - pos < needle.size() ||
            std::memcmp(text_.data() + pos, needle.data(), needle.size()) != 0)
            break;
        out.push_back(pos);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const AudioModel> AudioModel::load(ByteSpan file) {
    auto pages = ogg::split_pages(file);
    if (!pages) return nullptr;
    Bytes body;
    for (const auto& page : *pages) body.insert(body.end(), page.body.begin(), page.body.end());
    return from_body_stream(std::move(body));
}

std::shared_ptr<const AudioModel> AudioModel::from_body_stream(Bytes body) {
    auto model = std::shared_ptr<AudioModel>(new AudioModel);
    model->body_ = std::move(body);
    model->index_ = SuffixIndex(model->body_);
    return model;
}

std::vector<uint32_t> AudioModel::find_candidates(ByteSpan prefix,
                                                  std::optional<uint32_t> hint) const {
    std::vector<uint32_t> offsets = index_.find_all(prefix);
    if (hint) {
        auto it = std::find(offsets.begin(), offsets.end(), *hint);
        if (it != offsets.end()) std::rotate(offsets.begin(), it, it + 1);
    }
    return offsets;
}

bool AudioModel::matches_at(uint32_t offset, ByteSpan data) const {
    if (!in_range(offset, data.size())) return false;
    return std::memcmp(body_.data() + offset, data.data(), data.size()) == 0;
}

ByteSpan AudioModel::slice(uint32_t offset, size_t len) const {
    return ByteSpan(body_.data() + offset, len);
}

}  // namespace balboa::model
