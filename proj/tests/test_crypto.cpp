// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "balboa/crypto/aead.hpp"
#include "balboa/crypto/aes.hpp"
#include "balboa/crypto/blake3.hpp"
#include "balboa/crypto/poly1305.hpp"

#include "blake3_reference.hpp"

using namespace balboa;
using namespace balboa::crypto;

namespace {

Bytes H(const char* hex) {
    auto v = hex_decode(hex);
    REQUIRE(v.has_value());
    return *v;
}

std::string HX(ByteSpan b) { return hex_encode(b); }

// Incremental seal over a whole buffer, one byte at a time.
Bytes seal_bytewise(const AeadKey& key, ByteSpan nonce, ByteSpan aad, ByteSpan pt) {
    RecordAead ctx;
    ctx.init(key, AeadDir::Seal, nonce.data(), aad);
    Bytes out(pt.size() + 16);
    for (size_t i = 0; i < pt.size(); ++i) out[i] = ctx.process_byte(pt[i]);
    ctx.finalize(out.data() + pt.size());
    return out;
}

}  // namespace

TEST_CASE("AES known answers (FIPS-197 appendix C)") {
    {
        Bytes key = H("000102030405060708090a0b0c0d0e0f");
        Bytes pt = H("00112233445566778899aabbccddeeff");
        AesKey k(key.data(), key.size());
        uint8_t ct[16];
        k.encrypt_block(pt.data(), ct);
        CHECK(HX({ct, 16}) == "69c4e0d86a7b0430d8cdb78070b4c55a");
    }
    {
        Bytes key = H("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
        Bytes pt = H("00112233445566778899aabbccddeeff");
        AesKey k(key.data(), key.size());
        uint8_t ct[16];
        k.encrypt_block(pt.data(), ct);
        CHECK(HX({ct, 16}) == "8ea2b7ca516745bfeafc49904b496089");
    }
}

TEST_CASE("AES-GCM known answers (NIST zero-key cases)") {
    Bytes zero_key(16, 0);
    AeadKey key = AeadKey::make(AeadAlgo::Aes128Gcm, zero_key);
    uint8_t nonce[12] = {};
    // empty plaintext: tag only
    Bytes sealed = aead_seal(key, nonce, {}, {});
    CHECK(HX(sealed) == "58e2fccefa7e3061367f1d57a4e7455a");
    // 16 zero bytes
    Bytes zeros(16, 0);
    sealed = aead_seal(key, nonce, {}, zeros);
    CHECK(HX(sealed) == "0388dace60b6a392f328c2b971b2fe78ab6e47d42cec13bdf53a67b21257bddf");
}

TEST_CASE("Poly1305 RFC 8439 vector") {
    Bytes key = H("85d6be7857556d337f4452fe42d506a80103808afb0db2fd4abff6af4149f51b");
    const char* msg = "Cryptographic Forum Research Group";
    Poly1305 mac(key.data());
    mac.update(reinterpret_cast<const uint8_t*>(msg), 34);
    uint8_t tag[16];
    mac.digest(tag);
    CHECK(HX({tag, 16}) == "a8061dc1305136c6c22b8baf0c0127a9");
}

// Frozen vectors generated with an independent AEAD implementation
// (TLS 1.2-shaped nonces and additional data).
struct AeadVector {
    AeadAlgo algo;
    const char* key;
    const char* nonce;
    const char* aad;
    const char* pt;
    const char* ct;
    const char* tag;
};

static const AeadVector kVectors[] = {
    {AeadAlgo::Aes128Gcm, "000102030405060708090a0b0c0d0e0f", "101112132020202020202020",
     "0000000000000001170303002a",
     "00070e151c232a31383f464d545b626970777e858c939aa1a8afb6bdc4cbd2d9e0e7eef5fc030a11181f",
     "996eb55b312db9d429dc014711b4eb4ea4f54626b9d27cba21dcc9d8907f10afb65e5cec22144669e3af",
     "830447e7a619f48b509d015628c01e3a"},
    {AeadAlgo::Aes128Gcm, "000102030405060708090a0b0c0d0e0f", "101112132020202020202020",
     "00000000000000001703030000", "", "", "4464a94fc665cebba52d42faaae3fbad"},
    {AeadAlgo::Aes256Gcm,
     "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
     "101112132020202020202020", "0000000000000001170303002a",
     "00070e151c232a31383f464d545b626970777e858c939aa1a8afb6bdc4cbd2d9e0e7eef5fc030a11181f",
     "70394f7e6e0f9e5cf03b2406ca61242d2c3b557c794804769e8464714ed6e2f377a62edd64c0b70a3efb",
     "b7eb153ff05b8cd39d322842bad8d075"},
    {AeadAlgo::Chacha20Poly1305,
     "6465666768696a6b6c6d6e6f707172737475767778797a7b7c7d7e7f80818283",
     "32333435363738393a3b3c3d", "0000000000000001170303002a",
     "00070e151c232a31383f464d545b626970777e858c939aa1a8afb6bdc4cbd2d9e0e7eef5fc030a11181f",
     "df71026f926307cb4ba782ade288c87936fe4e661529391ae91a56f87f64cf1f4182057caef6763262f9",
     "2368707901787e116d00b870f1ab04da"},
    {AeadAlgo::Chacha20Poly1305,
     "6465666768696a6b6c6d6e6f707172737475767778797a7b7c7d7e7f80818283",
     "32333435363738393a3b3c3d", "00000000000000001703030000", "", "",
     "88c9ddd9dc5d8a56af07b7c8590857da"},
};

TEST_CASE("incremental AEAD reproduces frozen vectors") {
    for (const auto& v : kVectors) {
        CAPTURE(v.key);
        AeadKey key = AeadKey::make(v.algo, H(v.key));
        Bytes nonce = H(v.nonce), aad = H(v.aad), pt = H(v.pt);
        Bytes sealed = seal_bytewise(key, nonce, aad, pt);
        CHECK(HX(ByteSpan(sealed.data(), pt.size())) == v.ct);
        CHECK(HX(ByteSpan(sealed.data() + pt.size(), 16)) == v.tag);

        // open path: authenticator over the wire bytes must equal the same tag
        RecordAead open_ctx;
        open_ctx.init(key, AeadDir::Open, nonce.data(), aad);
        Bytes ct = H(v.ct);
        Bytes recovered(ct.size());
        for (size_t i = 0; i < ct.size(); ++i) recovered[i] = open_ctx.process_byte(ct[i]);
        uint8_t tag[16];
        open_ctx.finalize(tag);
        CHECK(HX(recovered) == v.pt);
        CHECK(HX({tag, 16}) == v.tag);
    }
}

TEST_CASE("seal(open(c)) is the identity on ciphertext bytes") {
    std::mt19937_64 rng(7);
    for (AeadAlgo algo :
         {AeadAlgo::Aes128Gcm, AeadAlgo::Aes256Gcm, AeadAlgo::Chacha20Poly1305}) {
        Bytes kb(aead_key_len(algo));
        for (auto& b : kb) b = static_cast<uint8_t>(rng());
        AeadKey key = AeadKey::make(algo, kb);
        uint8_t nonce[12];
        for (auto& b : nonce) b = static_cast<uint8_t>(rng());
        Bytes aad(13);
        for (auto& b : aad) b = static_cast<uint8_t>(rng());
        Bytes wire(257);
        for (auto& b : wire) b = static_cast<uint8_t>(rng());

        RecordAead open_ctx, seal_ctx;
        open_ctx.init(key, AeadDir::Open, nonce, aad);
        seal_ctx.init(key, AeadDir::Seal, nonce, aad);
        for (uint8_t c : wire) {
            const uint8_t plain = open_ctx.process_byte(c);
            CHECK(seal_ctx.process_byte(plain) == c);
        }
        uint8_t t1[16], t2[16];
        open_ctx.finalize(t1);
        seal_ctx.finalize(t2);
        CHECK(HX({t1, 16}) == HX({t2, 16}));
    }
}

TEST_CASE("BLAKE3 empty-input hash matches the published value") {
    uint8_t out[32];
    blake3_hash({}, out, 32);
    CHECK(HX({out, 32}) == "af1349b9f5f9a1a6a0404dea36dcc9499bcb25c9adc112b7cc9a93cae41f3262");
}

TEST_CASE("BLAKE3 agrees with an independent reference across modes and sizes") {
    std::mt19937_64 rng(11);
    uint8_t key[32];
    for (auto& b : key) b = static_cast<uint8_t>(rng());
    const char* ctx = "balboa-reenc";
    for (size_t len : {size_t{0}, size_t{1}, size_t{31}, size_t{64}, size_t{65}, size_t{128},
                       size_t{1024}, size_t{1025}, size_t{3072}, size_t{5000}, size_t{100000}}) {
        Bytes data(len);
        for (auto& b : data) b = static_cast<uint8_t>(rng());
        uint8_t a[67], b[67];

        blake3_hash(data, a, sizeof a);
        blake3_ref::hash(data.data(), data.size(), b, sizeof b);
        CHECK(HX({a, sizeof a}) == HX({b, sizeof b}));

        blake3_keyed(key, data, a, sizeof a);
        blake3_ref::keyed_hash(key, data.data(), data.size(), b, sizeof b);
        CHECK(HX({a, sizeof a}) == HX({b, sizeof b}));

        blake3_derive_key(ctx, data, a, sizeof a);
        blake3_ref::derive_key(ctx, data.data(), data.size(), b, sizeof b);
        CHECK(HX({a, sizeof a}) == HX({b, sizeof b}));
    }
}
