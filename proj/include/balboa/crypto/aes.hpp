// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstddef>

namespace balboa::crypto {

// AES-128/256 block cipher, encrypt direction only (CTR/GCM never decrypt blocks).
class AesKey {
 public:
    AesKey() = default;
    // key_len must be 16 or 32.
    AesKey(const uint8_t* key, size_t key_len);

    void encrypt_block(const uint8_t in[16], uint8_t out[16]) const;

 private:
    uint32_t round_keys_[60] = {};
    int rounds_ = 0;
};

}  // namespace balboa::crypto
