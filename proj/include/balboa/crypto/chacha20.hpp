// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace balboa::crypto {

// RFC 8439 block function: 32-byte key, 12-byte nonce, 32-bit counter.
void chacha20_block(const uint8_t key[32], const uint8_t nonce[12], uint32_t counter,
                    uint8_t out[64]);

}  // namespace balboa::crypto
