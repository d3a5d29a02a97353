// SPDX-License-Identifier: Apache-2.0
// Test-only reference implementation used as an independent oracle for the
// production code. Deliberately structured differently: incremental chunk
// state plus a stack of subtree chaining values.
#pragma once

#include <cstdint>
#include <cstring>
#include <string_view>

namespace blake3_ref {

inline constexpr uint32_t IV[8] = {0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
                                   0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19};
inline constexpr int MSG_PERMUTATION[16] = {2, 6, 3, 10, 7, 0, 4, 13, 1, 11, 12, 5, 9, 14, 15, 8};

enum Flags : uint32_t {
    CHUNK_START = 1,
    CHUNK_END = 2,
    PARENT = 4,
    ROOT = 8,
    KEYED_HASH = 16,
    DERIVE_KEY_CONTEXT = 32,
    DERIVE_KEY_MATERIAL = 64,
};

inline uint32_t rotr32(uint32_t w, int c) { return w >> c | w << (32 - c); }

inline void g(uint32_t state[16], int a, int b, int c, int d, uint32_t mx, uint32_t my) {
    state[a] = state[a] + state[b] + mx;
    state[d] = rotr32(state[d] ^ state[a], 16);
    state[c] = state[c] + state[d];
    state[b] = rotr32(state[b] ^ state[c], 12);
    state[a] = state[a] + state[b] + my;
    state[d] = rotr32(state[d] ^ state[a], 8);
    state[c] = state[c] + state[d];
    state[b] = rotr32(state[b] ^ state[c], 7);
}

inline void round_fn(uint32_t state[16], const uint32_t m[16]) {
    g(state, 0, 4, 8, 12, m[0], m[1]);
    g(state, 1, 5, 9, 13, m[2], m[3]);
    g(state, 2, 6, 10, 14, m[4], m[5]);
    g(state, 3, 7, 11, 15, m[6], m[7]);
    g(state, 0, 5, 10, 15, m[8], m[9]);
    g(state, 1, 6, 11, 12, m[10], m[11]);
    g(state, 2, 7, 8, 13, m[12], m[13]);
    g(state, 3, 4, 9, 14, m[14], m[15]);
}

inline void permute(uint32_t m[16]) {
    uint32_t permuted[16];
    for (int i = 0; i < 16; ++i) permuted[i] = m[MSG_PERMUTATION[i]];
    std::memcpy(m, permuted, 64);
}

inline void compress(const uint32_t chaining_value[8], const uint32_t block_words[16],
                     uint64_t counter, uint32_t block_len, uint32_t flags, uint32_t out[16]) {
    uint32_t state[16] = {
        chaining_value[0], chaining_value[1], chaining_value[2], chaining_value[3],
        chaining_value[4], chaining_value[5], chaining_value[6], chaining_value[7],
        IV[0], IV[1], IV[2], IV[3],
        static_cast<uint32_t>(counter), static_cast<uint32_t>(counter >> 32), block_len, flags,
    };
    uint32_t block[16];
    std::memcpy(block, block_words, 64);
    for (int i = 0; i < 6; ++i) {
        round_fn(state, block);
        permute(block);
    }
    round_fn(state, block);
    for (int i = 0; i < 8; ++i) {
        state[i] ^= state[i + 8];
        state[i + 8] ^= chaining_value[i];
    }
    std::memcpy(out, state, 64);
}

inline void words_from_le_bytes(const uint8_t* bytes, size_t len, uint32_t* words,
                                size_t nwords) {
    uint8_t buf[64] = {};
    std::memcpy(buf, bytes, len);
    for (size_t i = 0; i < nwords; ++i)
        words[i] = static_cast<uint32_t>(buf[4 * i]) | static_cast<uint32_t>(buf[4 * i + 1]) << 8 |
                   static_cast<uint32_t>(buf[4 * i + 2]) << 16 |
                   static_cast<uint32_t>(buf[4 * i + 3]) << 24;
}

struct Output {
    uint32_t input_cv[8];
    uint32_t block_words[16];
    uint64_t counter;
    uint32_t block_len;
    uint32_t flags;

    void chaining_value(uint32_t out[8]) const {
        uint32_t wide[16];
        compress(input_cv, block_words, counter, block_len, flags, wide);
        std::memcpy(out, wide, 32);
    }
    void root_output_bytes(uint8_t* out, size_t out_len) const {
        uint64_t output_counter = 0;
        while (out_len) {
            uint32_t wide[16];
            compress(input_cv, block_words, output_counter++, block_len, flags | ROOT, wide);
            for (size_t i = 0; i < 64 && out_len; ++i, --out_len)
                *out++ = static_cast<uint8_t>(wide[i / 4] >> (8 * (i % 4)));
        }
    }
};

class Hasher {
 public:
    Hasher() { init(IV, 0); }
    explicit Hasher(const uint32_t key_words[8], uint32_t flags) { init(key_words, flags); }

    void update(const uint8_t* input, size_t len) {
        while (len) {
            if (chunk_len_ == 1024) {
                uint32_t cv[8];
                chunk_output().chaining_value(cv);
                add_chunk_cv(cv, chunk_counter_ + 1);
                start_chunk(chunk_counter_ + 1);
            }
            if (block_len_ == 64) {
                uint32_t block_words[16];
                words_from_le_bytes(block_, 64, block_words, 16);
                uint32_t wide[16];
                compress(cv_, block_words, chunk_counter_, 64, flags_ | start_flag(), wide);
                std::memcpy(cv_, wide, 32);
                ++blocks_compressed_;
                block_len_ = 0;
            }
            size_t want = 64 - block_len_;
            size_t take = len < want ? len : want;
            std::memcpy(block_ + block_len_, input, take);
            block_len_ += take;
            chunk_len_ += take;
            input += take;
            len -= take;
        }
    }

    void finalize(uint8_t* out, size_t out_len) {
        Output output = chunk_output();
        int stack_len = stack_len_;
        while (stack_len > 0) {
            uint32_t right_cv[8];
            output.chaining_value(right_cv);
            output = parent_output(cv_stack_[--stack_len], right_cv);
        }
        output.root_output_bytes(out, out_len);
    }

 private:
    void init(const uint32_t key_words[8], uint32_t flags) {
        std::memcpy(key_, key_words, 32);
        flags_ = flags;
        start_chunk(0);
    }
    void start_chunk(uint64_t counter) {
        std::memcpy(cv_, key_, 32);
        chunk_counter_ = counter;
        chunk_len_ = 0;
        block_len_ = 0;
        blocks_compressed_ = 0;
    }
    uint32_t start_flag() const { return blocks_compressed_ == 0 ? uint32_t{CHUNK_START} : 0; }

    Output chunk_output() const {
        Output o;
        std::memcpy(o.input_cv, cv_, 32);
        words_from_le_bytes(block_, block_len_, o.block_words, 16);
        o.counter = chunk_counter_;
        o.block_len = static_cast<uint32_t>(block_len_);
        o.flags = flags_ | start_flag() | CHUNK_END;
        return o;
    }
    Output parent_output(const uint32_t left[8], const uint32_t right[8]) const {
        Output o;
        std::memcpy(o.input_cv, key_, 32);
        std::memcpy(o.block_words, left, 32);
        std::memcpy(o.block_words + 8, right, 32);
        o.counter = 0;
        o.block_len = 64;
        o.flags = flags_ | PARENT;
        return o;
    }
    void add_chunk_cv(uint32_t cv[8], uint64_t total_chunks) {
        // fold completed subtrees: one merge per trailing zero bit
        while ((total_chunks & 1) == 0) {
            uint32_t parent_cv[8];
            parent_output(cv_stack_[--stack_len_], cv).chaining_value(parent_cv);
            std::memcpy(cv, parent_cv, 32);
            total_chunks >>= 1;
        }
        std::memcpy(cv_stack_[stack_len_++], cv, 32);
    }

    uint32_t key_[8];
    uint32_t flags_ = 0;
    uint32_t cv_[8];
    uint64_t chunk_counter_ = 0;
    size_t chunk_len_ = 0;
    uint8_t block_[64];
    size_t block_len_ = 0;
    int blocks_compressed_ = 0;
    uint32_t cv_stack_[54][8];
    int stack_len_ = 0;
};

inline void hash(const uint8_t* data, size_t len, uint8_t* out, size_t out_len) {
    Hasher h;
    h.update(data, len);
    h.finalize(out, out_len);
}

inline void keyed_hash(const uint8_t key[32], const uint8_t* data, size_t len, uint8_t* out,
                       size_t out_len) {
    uint32_t kw[8];
    words_from_le_bytes(key, 32, kw, 8);
    Hasher h(kw, KEYED_HASH);
    h.update(data, len);
    h.finalize(out, out_len);
}

inline void derive_key(std::string_view context, const uint8_t* data, size_t len, uint8_t* out,
                       size_t out_len) {
    Hasher ctx_hasher(IV, DERIVE_KEY_CONTEXT);
    ctx_hasher.update(reinterpret_cast<const uint8_t*>(context.data()), context.size());
    uint8_t ctx_key[32];
    ctx_hasher.finalize(ctx_key, 32);
    uint32_t kw[8];
    words_from_le_bytes(ctx_key, 32, kw, 8);
    Hasher h(kw, DERIVE_KEY_MATERIAL);
    h.update(data, len);
    h.finalize(out, out_len);
}

}  // namespace blake3_ref
