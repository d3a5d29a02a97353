// SPDX-License-Identifier: Apache-2.0
#include "balboa/crypto/blake3.hpp"

#include <cstring>

namespace balboa::crypto {
namespace {

constexpr uint32_t kIv[8] = {0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
                             0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19};

constexpr uint32_t kChunkStart = 1 << 0;
constexpr uint32_t kChunkEnd = 1 << 1;
constexpr uint32_t kParent = 1 << 2;
constexpr uint32_t kRoot = 1 << 3;
constexpr uint32_t kKeyedHash = 1 << 4;
constexpr uint32_t kDeriveKeyContext = 1 << 5;
constexpr uint32_t kDeriveKeyMaterial = 1 << 6;

constexpr size_t kBlockLen = 64;
constexpr size_t kChunkLen = 1024;

constexpr int kPerm[16] = {2, 6, 3, 10, 7, 0, 4, 13, 1, 11, 12, 5, 9, 14, 15, 8};

inline uint32_t rotr(uint32_t v, int n) { return v >> n | v << (32 - n); }

inline void g(uint32_t* v, int a, int b, int c, int d, uint32_t mx, uint32_t my) {
    v[a] = v[a] + v[b] + mx;
    v[d] = rotr(v[d] ^ v[a], 16);
    v[c] = v[c] + v[d];
    v[b] = rotr(v[b] ^ v[c], 12);
    v[a] = v[a] + v[b] + my;
    v[d] = rotr(v[d] ^ v[a], 8);
    v[c] = v[c] + v[d];
    v[b] = rotr(v[b] ^ v[c], 7);
}

void compress(const uint32_t cv[8], const uint32_t block[16], uint64_t counter,
              uint32_t block_len, uint32_t flags, uint32_t out[16]) {
    uint32_t v[16];
    uint32_t m[16];
    std::memcpy(v, cv, 32);
    std::memcpy(v + 8, kIv, 16);
    v[12] = static_cast<uint32_t>(counter);
    v[13] = static_cast<uint32_t>(counter >> 32);
    v[14] = block_len;
    v[15] = flags;
    std::memcpy(m, block, 64);

    for (int round = 0;; ++round) {
        g(v, 0, 4, 8, 12, m[0], m[1]);
        g(v, 1, 5, 9, 13, m[2], m[3]);
        g(v, 2, 6, 10, 14, m[4], m[5]);
        g(v, 3, 7, 11, 15, m[6], m[7]);
        g(v, 0, 5, 10, 15, m[8], m[9]);
        g(v, 1, 6, 11, 12, m[10], m[11]);
        g(v, 2, 7, 8, 13, m[12], m[13]);
        g(v, 3, 4, 9, 14, m[14], m[15]);
        if (round == 6) break;
        uint32_t p[16];
        for (int i = 0; i < 16; ++i) p[i] = m[kPerm[i]];
        std::memcpy(m, p, 64);
    }
    for (int i = 0; i < 8; ++i) {
        out[i] = v[i] ^ v[i + 8];
        out[i + 8] = v[i + 8] ^ cv[i];
    }
}

void words_from_bytes(const uint8_t* p, size_t n, uint32_t* w, size_t nwords) {
    uint8_t padded[64] = {};
    std::memcpy(padded, p, n);
    for (size_t i = 0; i < nwords; ++i) {
        const uint8_t* q = padded + 4 * i;
        w[i] = static_cast<uint32_t>(q[0]) | static_cast<uint32_t>(q[1]) << 8 |
               static_cast<uint32_t>(q[2]) << 16 | static_cast<uint32_t>(q[3]) << 24;
    }
}

// The pending final compression; ROOT is applied here so the same subtree code
// serves both chaining-value and root-output positions.
struct Output {
    uint32_t cv[8];
    uint32_t block[16];
    uint32_t block_len;
    uint64_t counter;
    uint32_t flags;

    void chaining_value(uint32_t out_cv[8]) const {
        uint32_t wide[16];
        compress(cv, block, counter, block_len, flags, wide);
        std::memcpy(out_cv, wide, 32);
    }
    void root_bytes(uint8_t* out, size_t out_len) const {
        uint64_t block_counter = 0;
        while (out_len > 0) {
            uint32_t wide[16];
            compress(cv, block, block_counter++, block_len, flags | kRoot, wide);
            uint8_t bytes[64];
            for (int i = 0; i < 16; ++i) {
                bytes[4 * i] = static_cast<uint8_t>(wide[i]);
                bytes[4 * i + 1] = static_cast<uint8_t>(wide[i] >> 8);
                bytes[4 * i + 2] = static_cast<uint8_t>(wide[i] >> 16);
                bytes[4 * i + 3] = static_cast<uint8_t>(wide[i] >> 24);
            }
            const size_t take = out_len < 64 ? out_len : 64;
            std::memcpy(out, bytes, take);
            out += take;
            out_len -= take;
        }
    }
};

Output chunk_output(const uint32_t key[8], const uint8_t* data, size_t len,
                    uint64_t chunk_counter, uint32_t base_flags) {
    uint32_t cv[8];
    std::memcpy(cv, key, 32);
    size_t pos = 0;
    uint32_t start = kChunkStart;
    // all full blocks except the one kept for the Output
    while (len - pos > kBlockLen) {
        uint32_t block[16];
        words_from_bytes(data + pos, kBlockLen, block, 16);
        uint32_t wide[16];
        compress(cv, block, chunk_counter, kBlockLen, base_flags | start, wide);
        std::memcpy(cv, wide, 32);
        start = 0;
        pos += kBlockLen;
    }
    Output out;
    std::memcpy(out.cv, cv, 32);
    words_from_bytes(data + pos, len - pos, out.block, 16);
    out.block_len = static_cast<uint32_t>(len - pos);
    out.counter = chunk_counter;
    out.flags = base_flags | start | kChunkEnd;
    return out;
}

Output parent_output(const uint32_t key[8], const uint32_t left[8], const uint32_t right[8],
                     uint32_t base_flags) {
    Output out;
    std::memcpy(out.cv, key, 32);
    std::memcpy(out.block, left, 32);
    std::memcpy(out.block + 8, right, 32);
    out.block_len = kBlockLen;
    out.counter = 0;
    out.flags = base_flags | kParent;
    return out;
}

size_t left_subtree_chunks(size_t total_chunks) {
    // largest power of two strictly less than total_chunks
    size_t n = 1;
    while (n * 2 < total_chunks) n *= 2;
    return n;
}

Output subtree_output(const uint32_t key[8], const uint8_t* data, size_t len,
                      uint64_t chunk_counter, uint32_t base_flags) {
    if (len <= kChunkLen) return chunk_output(key, data, len, chunk_counter, base_flags);
    const size_t total_chunks = (len + kChunkLen - 1) / kChunkLen;
    const size_t left_chunks = left_subtree_chunks(total_chunks);
    const size_t left_len = left_chunks * kChunkLen;
    uint32_t left_cv[8], right_cv[8];
    subtree_output(key, data, left_len, chunk_counter, base_flags).chaining_value(left_cv);
    subtree_output(key, data + left_len, len - left_len, chunk_counter + left_chunks, base_flags)
        .chaining_value(right_cv);
    return parent_output(key, left_cv, right_cv, base_flags);
}

void hash_with_key(const uint32_t key[8], ByteSpan data, uint32_t base_flags, uint8_t* out,
                   size_t out_len) {
    static const uint8_t kEmpty = 0;
    const uint8_t* p = data.empty() ? &kEmpty : data.data();
    subtree_output(key, p, data.size(), 0, base_flags).root_bytes(out, out_len);
}

}  // namespace

void blake3_hash(ByteSpan data, uint8_t* out, size_t out_len) {
    hash_with_key(kIv, data, 0, out, out_len);
}

void blake3_keyed(const uint8_t key[32], ByteSpan data, uint8_t* out, size_t out_len) {
    uint32_t kw[8];
    words_from_bytes(key, 32, kw, 8);
    hash_with_key(kw, data, kKeyedHash, out, out_len);
}

void blake3_derive_key(std::string_view context, ByteSpan material, uint8_t* out,
                       size_t out_len) {
    uint8_t ctx_hash[32];
    hash_with_key(kIv,
                  ByteSpan(reinterpret_cast<const uint8_t*>(context.data()), context.size()),
                  kDeriveKeyContext, ctx_hash, 32);
    uint32_t kw[8];
    words_from_bytes(ctx_hash, 32, kw, 8);
    hash_with_key(kw, material, kDeriveKeyMaterial, out, out_len);
}

}  // namespace balboa::crypto
