// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "balboa/bytes.hpp"
#include "balboa/tls/cipher_suite.hpp"

namespace balboa::tls {

constexpr size_t kMasterSecretLen = 48;
constexpr size_t kRandomLen = 32;

struct SessionSecrets {
    std::array<uint8_t, kMasterSecretLen> master_secret{};
    std::array<uint8_t, kRandomLen> client_random{};
    std::array<uint8_t, kRandomLen> server_random{};
    CipherSuite suite = CipherSuite::Aes128Gcm;
};

// One direction's write keys: AEAD key plus the key block's implicit IV part.
struct DirectionKeys {
    Bytes aead_key;
    Bytes implicit_iv;  // 4 bytes for GCM, 12 for ChaCha20-Poly1305
};

struct DirectionKeyPair {
    DirectionKeys client_write;
    DirectionKeys server_write;
};

// Derived covert-channel keys: k' re-encryption key plus signaling masks.
struct CovertKeys {
    Bytes k_prime;                  // suite key length
    std::array<uint8_t, 16> k_client{};
    std::array<uint8_t, 16> k_server{};
};

// TLS 1.2 key expansion ("key expansion", server_random || client_random).
DirectionKeyPair derive_direction_keys(const SessionSecrets& secrets);

// k', k_C, k_S from BLAKE3 derive-key over mk || k (k = pre-shared key, non-empty).
CovertKeys derive_covert_keys(ByteSpan master_secret, ByteSpan pre_shared_key,
                              CipherSuite suite);

}  // namespace balboa::tls
