// SPDX-License-Identifier: Apache-2.0
#include "balboa/crypto/ghash.hpp"

#include <cstring>

namespace balboa::crypto {
namespace {

uint64_t load_be64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = v << 8 | p[i];
    return v;
}

void store_be64(uint8_t* p, uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<uint8_t>(v >> (56 - 8 * i));
}

// Right shift by one bit in GCM's reflected field representation, folding the
// dropped bit back in with the reduction polynomial 0xE1.
inline void shr1(uint64_t& hi, uint64_t& lo) {
    const bool carry = lo & 1;
    lo = lo >> 1 | hi << 63;
    hi >>= 1;
    if (carry) hi ^= 0xE100000000000000ULL;
}

// Compensation terms for shifting out a low nibble, derived at startup.
struct Rem4Table {
    uint64_t v[16];
    Rem4Table() {
        for (unsigned i = 0; i < 16; ++i) {
            uint64_t hi = 0, lo = i;
            for (int b = 0; b < 4; ++b) shr1(hi, lo);
            v[i] = hi;
        }
    }
};
const Rem4Table& rem4_table() {
    static const Rem4Table t;
    return t;
}

}  // namespace

uint64_t GhashKey::rem4(unsigned i) { return rem4_table().v[i]; }

GhashKey::GhashKey(const uint8_t h[16]) {
    Elem v{load_be64(h), load_be64(h + 8)};
    table[8] = v;
    shr1(v.hi, v.lo);
    table[4] = v;
    shr1(v.hi, v.lo);
    table[2] = v;
    shr1(v.hi, v.lo);
    table[1] = v;
    for (unsigned i = 2; i < 16; i <<= 1)
        for (unsigned j = 1; j < i; ++j)
            table[i + j] = Elem{table[i].hi ^ table[j].hi, table[i].lo ^ table[j].lo};
}

void Ghash::flush_block() {
    uint8_t x[16];
    store_be64(x, hi_ ^ load_be64(buf_));
    store_be64(x + 8, lo_ ^ load_be64(buf_ + 8));
    // 4-bit table multiply: x * H, nibbles from the last byte upward.
    const GhashKey::Elem* ht = key_->table;
    unsigned nlo = x[15] & 0xf, nhi = x[15] >> 4;
    uint64_t zh = ht[nlo].hi, zl = ht[nlo].lo;
    int cnt = 14;
    for (;;) {
        unsigned rem = static_cast<unsigned>(zl) & 0xf;
        zl = zh << 60 | zl >> 4;
        zh = zh >> 4;
        zh ^= GhashKey::rem4(rem);
        zh ^= ht[nhi].hi;
        zl ^= ht[nhi].lo;
        if (cnt < 0) break;
        nlo = x[cnt] & 0xf;
        nhi = x[cnt] >> 4;
        --cnt;
        rem = static_cast<unsigned>(zl) & 0xf;
        zl = zh << 60 | zl >> 4;
        zh = zh >> 4;
        zh ^= GhashKey::rem4(rem);
        zh ^= ht[nlo].hi;
        zl ^= ht[nlo].lo;
    }
    hi_ = zh;
    lo_ = zl;
    fill_ = 0;
}

void Ghash::pad_block() {
    if (fill_ == 0) return;
    while (fill_ < 16) buf_[fill_++] = 0;
    flush_block();
}

void Ghash::digest(uint8_t out[16]) {
    pad_block();
    store_be64(out, hi_);
    store_be64(out + 8, lo_);
}

}  // namespace balboa::crypto
