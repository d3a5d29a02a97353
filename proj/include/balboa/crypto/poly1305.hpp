// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstddef>

namespace balboa::crypto {

// RFC 8439 one-time authenticator, incremental.
class Poly1305 {
 public:
    explicit Poly1305(const uint8_t key[32]);

    void update_byte(uint8_t b) {
        buf_[fill_++] = b;
        if (fill_ == 16) process_block(true);
    }
    void update(const uint8_t* p, size_t n) {
        for (size_t i = 0; i < n; ++i) update_byte(p[i]);
    }
    void digest(uint8_t out[16]);

 private:
    void process_block(bool full);

    uint32_t r_[5];
    uint32_t h_[5] = {};
    uint32_t pad_[4];
    uint8_t buf_[17];
    unsigned fill_ = 0;
};

}  // namespace balboa::crypto
