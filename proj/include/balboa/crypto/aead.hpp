// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "balboa/bytes.hpp"
#include "balboa/crypto/aes.hpp"
#include "balboa/crypto/chacha20.hpp"
#include "balboa/crypto/ghash.hpp"
#include "balboa/crypto/poly1305.hpp"

namespace balboa::crypto {

enum class AeadAlgo { Aes128Gcm, Aes256Gcm, Chacha20Poly1305 };

constexpr size_t aead_key_len(AeadAlgo a) {
    return a == AeadAlgo::Aes128Gcm ? 16 : 32;
}
constexpr size_t kTagLen = 16;
constexpr size_t kNonceLen = 12;

// Per-direction expanded key material, shared across all records of a stream.
struct AeadKey {
    AeadAlgo algo = AeadAlgo::Aes128Gcm;
    AesKey aes;
    GhashKey ghash;
    uint8_t chacha_key[32] = {};

    static AeadKey make(AeadAlgo algo, ByteSpan key);
};

enum class AeadDir {
    Open,  // wire ciphertext in, plaintext out; authenticator over input
    Seal,  // plaintext in, ciphertext out; authenticator over output
};

// One record's incremental AEAD stream: keystream XOR one byte at a time with
// the authenticator updated as bytes flow. The tag becomes available the
// moment the last payload byte has been processed.
class RecordAead {
 public:
    RecordAead() = default;
    void init(const AeadKey& key, AeadDir dir, const uint8_t nonce[kNonceLen], ByteSpan aad);

    uint8_t process_byte(uint8_t b);
    void finalize(uint8_t tag[kTagLen]);

    bool active() const { return active_; }

 private:
    uint8_t next_keystream_byte();

    const AeadKey* key_ = nullptr;
    AeadDir dir_ = AeadDir::Open;
    bool active_ = false;

    // keystream
    uint8_t ks_[64];
    unsigned ks_pos_ = 0;
    unsigned ks_len_ = 0;
    uint32_t counter_ = 0;
    uint8_t nonce_[kNonceLen];

    // authenticator
    std::optional<Ghash> ghash_;
    std::optional<Poly1305> poly_;
    uint8_t ek_j0_[16];
    uint64_t aad_len_ = 0;
    uint64_t data_len_ = 0;
};

// Whole-record conveniences (test harness, synthetic streams).
Bytes aead_seal(const AeadKey& key, const uint8_t nonce[kNonceLen], ByteSpan aad, ByteSpan plain);
std::optional<Bytes> aead_open(const AeadKey& key, const uint8_t nonce[kNonceLen], ByteSpan aad,
                               ByteSpan ct_and_tag);

}  // namespace balboa::crypto
