// SPDX-License-Identifier: Apache-2.0
#include "balboa/crypto/aes.hpp"

#include <cassert>

namespace balboa::crypto {
namespace {

// S-box and encryption T-tables, generated once from the field arithmetic
// rather than transcribed.
struct Tables {
    uint8_t sbox[256];
    uint32_t te0[256], te1[256], te2[256], te3[256];

    static uint8_t xtime(uint8_t x) {
        return static_cast<uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1b : 0));
    }

    Tables() {
        // Multiplicative inverse via 3/0xf6 generator walk.
        uint8_t pow[256], log[256];
        uint8_t p = 1;
        for (int i = 0; i < 256; ++i) {
            pow[i] = p;
            log[p] = static_cast<uint8_t>(i);
            p = static_cast<uint8_t>(p ^ xtime(p));  // multiply by 3
        }
        for (int i = 0; i < 256; ++i) {
            uint8_t inv = i == 0 ? 0 : pow[255 - log[i]];
            uint8_t s = inv;
            // affine transform
            uint8_t x = inv;
            for (int r = 0; r < 4; ++r) {
                x = static_cast<uint8_t>(x << 1 | x >> 7);
                s ^= x;
            }
            s ^= 0x63;
            sbox[i] = s;
        }
        for (int i = 0; i < 256; ++i) {
            uint8_t s = sbox[i];
            uint8_t s2 = xtime(s);
            uint8_t s3 = static_cast<uint8_t>(s2 ^ s);
            uint32_t t = static_cast<uint32_t>(s2) << 24 | static_cast<uint32_t>(s) << 16 |
                         static_cast<uint32_t>(s) << 8 | s3;
            te0[i] = t;
            te1[i] = t >> 8 | t << 24;
            te2[i] = t >> 16 | t << 16;
            te3[i] = t >> 24 | t << 8;
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

uint32_t load_be32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) << 24 | static_cast<uint32_t>(p[1]) << 16 |
           static_cast<uint32_t>(p[2]) << 8 | p[3];
}

void store_be32(uint8_t* p, uint32_t v) {
    p[0] = static_cast<uint8_t>(v >> 24);
    p[1] = static_cast<uint8_t>(v >> 16);
    p[2] = static_cast<uint8_t>(v >> 8);
    p[3] = static_cast<uint8_t>(v);
}

uint32_t sub_word(uint32_t w) {
    const Tables& t = tables();
    return static_cast<uint32_t>(t.sbox[w >> 24]) << 24 |
           static_cast<uint32_t>(t.sbox[(w >> 16) & 0xff]) << 16 |
           static_cast<uint32_t>(t.sbox[(w >> 8) & 0xff]) << 8 | t.sbox[w & 0xff];
}

}  // namespace

AesKey::AesKey(const uint8_t* key, size_t key_len) {
    assert(key_len == 16 || key_len == 32);
    const int nk = static_cast<int>(key_len / 4);
    rounds_ = nk + 6;
    const int nwords = 4 * (rounds_ + 1);
    for (int i = 0; i < nk; ++i) round_keys_[i] = load_be32(key + 4 * i);
    uint32_t rcon = 0x01000000;
    for (int i = nk; i < nwords; ++i) {
        uint32_t w = round_keys_[i - 1];
        if (i % nk == 0) {
            w = sub_word(w << 8 | w >> 24) ^ rcon;
            rcon = rcon & 0x80000000 ? (rcon << 1) ^ 0x1b000000 : rcon << 1;
        } else if (nk == 8 && i % nk == 4) {
            w = sub_word(w);
        }
        round_keys_[i] = round_keys_[i - nk] ^ w;
    }
}

void AesKey::encrypt_block(const uint8_t in[16], uint8_t out[16]) const {
    const Tables& t = tables();
    const uint32_t* rk = round_keys_;
    uint32_t s0 = load_be32(in) ^ rk[0];
    uint32_t s1 = load_be32(in + 4) ^ rk[1];
    uint32_t s2 = load_be32(in + 8) ^ rk[2];
    uint32_t s3 = load_be32(in + 12) ^ rk[3];
    rk += 4;
    for (int r = 1; r < rounds_; ++r, rk += 4) {
        uint32_t t0 = t.te0[s0 >> 24] ^ t.te1[(s1 >> 16) & 0xff] ^ t.te2[(s2 >> 8) & 0xff] ^
                      t.te3[s3 & 0xff] ^ rk[0];
        uint32_t t1 = t.te0[s1 >> 24] ^ t.te1[(s2 >> 16) & 0xff] ^ t.te2[(s3 >> 8) & 0xff] ^
                      t.te3[s0 & 0xff] ^ rk[1];
        uint32_t t2 = t.te0[s2 >> 24] ^ t.te1[(s3 >> 16) & 0xff] ^ t.te2[(s0 >> 8) & 0xff] ^
                      t.te3[s1 & 0xff] ^ rk[2];
        uint32_t t3 = t.te0[s3 >> 24] ^ t.te1[(s0 >> 16) & 0xff] ^ t.te2[(s1 >> 8) & 0xff] ^
                      t.te3[s2 & 0xff] ^ rk[3];
        s0 = t0; s1 = t1; s2 = t2; s3 = t3;
    }
    auto last = [&](uint32_t a, uint32_t b, uint32_t c, uint32_t d, uint32_t k) {
        return (static_cast<uint32_t>(t.sbox[a >> 24]) << 24 |
                static_cast<uint32_t>(t.sbox[(b >> 16) & 0xff]) << 16 |
                static_cast<uint32_t>(t.sbox[(c >> 8) & 0xff]) << 8 | t.sbox[d & 0xff]) ^ k;
    };
    store_be32(out, last(s0, s1, s2, s3, rk[0]));
    store_be32(out + 4, last(s1, s2, s3, s0, rk[1]));
    store_be32(out + 8, last(s2, s3, s0, s1, rk[2]));
    store_be32(out + 12, last(s3, s0, s1, s2, rk[3]));
}

}  // namespace balboa::crypto
