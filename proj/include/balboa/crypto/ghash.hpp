// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstddef>

namespace balboa::crypto {

// GF(2^128) hash key with Shoup 4-bit tables, shared across records.
class GhashKey {
 public:
    GhashKey() = default;
    explicit GhashKey(const uint8_t h[16]);

    struct Elem {
        uint64_t hi = 0, lo = 0;
    };
    Elem table[16];
    static uint64_t rem4(unsigned i);
};

// Incremental GHASH over a byte stream (internally blocked to 16 bytes).
class Ghash {
 public:
    explicit Ghash(const GhashKey& key) : key_(&key) {}

    void update_byte(uint8_t b) {
        buf_[fill_++] = b;
        if (fill_ == 16) flush_block();
    }
    void update(const uint8_t* p, size_t n) {
        for (size_t i = 0; i < n; ++i) update_byte(p[i]);
    }
    // Zero-pads the current partial block, as GCM does between AAD/ciphertext
    // and before the length block.
    void pad_block();
    void digest(uint8_t out[16]);

 private:
    void flush_block();

    const GhashKey* key_;
    uint64_t hi_ = 0, lo_ = 0;
    uint8_t buf_[16];
    unsigned fill_ = 0;
};

}  // namespace balboa::crypto
