// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "balboa/bytes.hpp"

namespace balboa::crypto {

// BLAKE3 with extendable output, plus the keyed and derive-key modes.
void blake3_hash(ByteSpan data, uint8_t* out, size_t out_len);
void blake3_keyed(const uint8_t key[32], ByteSpan data, uint8_t* out, size_t out_len);
void blake3_derive_key(std::string_view context, ByteSpan material, uint8_t* out, size_t out_len);

}  // namespace balboa::crypto
