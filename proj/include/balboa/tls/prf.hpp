// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "balboa/bytes.hpp"
#include "balboa/tls/cipher_suite.hpp"

namespace balboa::tls {

// TLS 1.2 PRF (RFC 5246 §5): P_<hash>(secret, label + seed).
Bytes tls12_prf(PrfHash hash, ByteSpan secret, std::string_view label, ByteSpan seed,
                size_t out_len);

}  // namespace balboa::tls
