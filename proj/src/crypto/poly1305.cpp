// SPDX-License-Identifier: Apache-2.0
#include "balboa/crypto/poly1305.hpp"

namespace balboa::crypto {
namespace {

inline uint32_t load_le32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
           static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

}  // namespace

Poly1305::Poly1305(const uint8_t key[32]) {
    // 26-bit limb split of the clamped r.
    r_[0] = load_le32(key) & 0x3ffffff;
    r_[1] = (load_le32(key + 3) >> 2) & 0x3ffff03;
    r_[2] = (load_le32(key + 6) >> 4) & 0x3ffc0ff;
    r_[3] = (load_le32(key + 9) >> 6) & 0x3f03fff;
    r_[4] = (load_le32(key + 12) >> 8) & 0x00fffff;
    for (int i = 0; i < 4; ++i) pad_[i] = load_le32(key + 16 + 4 * i);
}

void Poly1305::process_block(bool full) {
    const uint32_t hibit = full ? 1u << 24 : 0;
    if (!full) {
        // pad the partial block with a 1 bit then zeros
        buf_[fill_++] = 1;
        while (fill_ < 16) buf_[fill_++] = 0;
    }
    uint32_t h0 = h_[0] + (load_le32(buf_) & 0x3ffffff);
    uint32_t h1 = h_[1] + ((load_le32(buf_ + 3) >> 2) & 0x3ffffff);
    uint32_t h2 = h_[2] + ((load_le32(buf_ + 6) >> 4) & 0x3ffffff);
    uint32_t h3 = h_[3] + ((load_le32(buf_ + 9) >> 6) & 0x3ffffff);
    uint32_t h4 = h_[4] + ((load_le32(buf_ + 12) >> 8) | hibit);

    const uint64_t r0 = r_[0], r1 = r_[1], r2 = r_[2], r3 = r_[3], r4 = r_[4];
    const uint64_t s1 = r1 * 5, s2 = r2 * 5, s3 = r3 * 5, s4 = r4 * 5;

    uint64_t d0 = h0 * r0 + h1 * s4 + h2 * s3 + h3 * s2 + h4 * s1;
    uint64_t d1 = h0 * r1 + h1 * r0 + h2 * s4 + h3 * s3 + h4 * s2;
    uint64_t d2 = h0 * r2 + h1 * r1 + h2 * r0 + h3 * s4 + h4 * s3;
    uint64_t d3 = h0 * r3 + h1 * r2 + h2 * r1 + h3 * r0 + h4 * s4;
    uint64_t d4 = h0 * r4 + h1 * r3 + h2 * r2 + h3 * r1 + h4 * r0;

    uint64_t c = d0 >> 26; h0 = d0 & 0x3ffffff;
    d1 += c; c = d1 >> 26; h1 = d1 & 0x3ffffff;
    d2 += c; c = d2 >> 26; h2 = d2 & 0x3ffffff;
    d3 += c; c = d3 >> 26; h3 = d3 & 0x3ffffff;
    d4 += c; c = d4 >> 26; h4 = d4 & 0x3ffffff;
    h0 += static_cast<uint32_t>(c) * 5;
    c = h0 >> 26; h0 &= 0x3ffffff;
    h1 += static_cast<uint32_t>(c);

    h_[0] = h0; h_[1] = h1; h_[2] = h2; h_[3] = h3; h_[4] = h4;
    fill_ = 0;
}

void Poly1305::digest(uint8_t out[16]) {
    if (fill_ > 0) process_block(false);

    uint32_t h0 = h_[0], h1 = h_[1], h2 = h_[2], h3 = h_[3], h4 = h_[4];
    // full carry
    uint32_t c = h1 >> 26; h1 &= 0x3ffffff;
    h2 += c; c = h2 >> 26; h2 &= 0x3ffffff;
    h3 += c; c = h3 >> 26; h3 &= 0x3ffffff;
    h4 += c; c = h4 >> 26; h4 &= 0x3ffffff;
    h0 += c * 5; c = h0 >> 26; h0 &= 0x3ffffff;
    h1 += c;

    // g = h + 5 - 2^130, select g when h >= p
    uint32_t g0 = h0 + 5; c = g0 >> 26; g0 &= 0x3ffffff;
    uint32_t g1 = h1 + c; c = g1 >> 26; g1 &= 0x3ffffff;
    uint32_t g2 = h2 + c; c = g2 >> 26; g2 &= 0x3ffffff;
    uint32_t g3 = h3 + c; c = g3 >> 26; g3 &= 0x3ffffff;
    uint32_t g4 = h4 + c - (1u << 26);

    const uint32_t take_g = (g4 >> 31) ^ 1;  // 1 when no borrow, i.e. h >= p
    const uint32_t mask_g = 0u - take_g, mask_h = ~mask_g;
    h0 = (h0 & mask_h) | (g0 & mask_g);
    h1 = (h1 & mask_h) | (g1 & mask_g);
    h2 = (h2 & mask_h) | (g2 & mask_g);
    h3 = (h3 & mask_h) | (g3 & mask_g);
    h4 = (h4 & mask_h) | (g4 & mask_g);

    // h = h % 2^128 back to 32-bit words
    uint32_t w0 = h0 | h1 << 26;
    uint32_t w1 = h1 >> 6 | h2 << 20;
    uint32_t w2 = h2 >> 12 | h3 << 14;
    uint32_t w3 = h3 >> 18 | h4 << 8;

    // add pad with carry
    uint64_t f = static_cast<uint64_t>(w0) + pad_[0];
    w0 = static_cast<uint32_t>(f);
    f = static_cast<uint64_t>(w1) + pad_[1] + (f >> 32);
    w1 = static_cast<uint32_t>(f);
    f = static_cast<uint64_t>(w2) + pad_[2] + (f >> 32);
    w2 = static_cast<uint32_t>(f);
    f = static_cast<uint64_t>(w3) + pad_[3] + (f >> 32);
    w3 = static_cast<uint32_t>(f);

    const uint32_t words[4] = {w0, w1, w2, w3};
    for (int i = 0; i < 4; ++i) {
        out[4 * i] = static_cast<uint8_t>(words[i]);
        out[4 * i + 1] = static_cast<uint8_t>(words[i] >> 8);
        out[4 * i + 2] = static_cast<uint8_t>(words[i] >> 16);
        out[4 * i + 3] = static_cast<uint8_t>(words[i] >> 24);
    }
}

}  // namespace balboa::crypto
