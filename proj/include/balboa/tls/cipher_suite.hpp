// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>

#include "balboa/crypto/aead.hpp"

namespace balboa::tls {

enum class CipherSuite : uint8_t {
    Aes128Gcm,
    Aes256Gcm,
    Chacha20Poly1305,
};

enum class PrfHash : uint8_t { Sha256, Sha384 };

struct SuiteInfo {
    crypto::AeadAlgo algo;
    size_t key_len;
    size_t fixed_iv_len;       // implicit IV bytes from the key block
    size_t explicit_nonce_len; // per-record nonce bytes on the wire
    PrfHash prf;
};

constexpr SuiteInfo suite_info(CipherSuite s) {
    switch (s) {
        case CipherSuite::Aes128Gcm:
            return {crypto::AeadAlgo::Aes128Gcm, 16, 4, 8, PrfHash::Sha256};
        case CipherSuite::Aes256Gcm:
            return {crypto::AeadAlgo::Aes256Gcm, 32, 4, 8, PrfHash::Sha384};
        case CipherSuite::Chacha20Poly1305:
        default:
            return {crypto::AeadAlgo::Chacha20Poly1305, 32, 12, 0, PrfHash::Sha256};
    }
}

// TLS 1.2 wire codepoints for the stream-AEAD suites this engine handles.
inline std::optional<CipherSuite> suite_from_codepoint(uint16_t cp) {
    switch (cp) {
        case 0xC02B:  // ECDHE_ECDSA AES_128_GCM_SHA256
        case 0xC02F:  // ECDHE_RSA   AES_128_GCM_SHA256
            return CipherSuite::Aes128Gcm;
        case 0xC02C:  // ECDHE_ECDSA AES_256_GCM_SHA384
        case 0xC030:  // ECDHE_RSA   AES_256_GCM_SHA384
            return CipherSuite::Aes256Gcm;
        case 0xCCA8:  // ECDHE_RSA   CHACHA20_POLY1305_SHA256
        case 0xCCA9:  // ECDHE_ECDSA CHACHA20_POLY1305_SHA256
            return CipherSuite::Chacha20Poly1305;
        default:
            return std::nullopt;
    }
}

}  // namespace balboa::tls
