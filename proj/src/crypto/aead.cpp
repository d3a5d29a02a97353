// SPDX-License-Identifier: Apache-2.0
#include "balboa/crypto/aead.hpp"

#include <cassert>
#include <cstring>

namespace balboa::crypto {

AeadKey AeadKey::make(AeadAlgo algo, ByteSpan key) {
    assert(key.size() == aead_key_len(algo));
    AeadKey k;
    k.algo = algo;
    if (algo == AeadAlgo::Chacha20Poly1305) {
        std::memcpy(k.chacha_key, key.data(), 32);
    } else {
        k.aes = AesKey(key.data(), key.size());
        uint8_t h[16] = {};
        uint8_t zero[16] = {};
        k.aes.encrypt_block(zero, h);
        k.ghash = GhashKey(h);
    }
    return k;
}

void RecordAead::init(const AeadKey& key, AeadDir dir, const uint8_t nonce[kNonceLen],
                      ByteSpan aad) {
    key_ = &key;
    dir_ = dir;
    active_ = true;
    aad_len_ = aad.size();
    data_len_ = 0;
    ks_pos_ = 0;
    ks_len_ = 0;
    std::memcpy(nonce_, nonce, kNonceLen);

    if (key.algo == AeadAlgo::Chacha20Poly1305) {
        uint8_t block0[64];
        chacha20_block(key.chacha_key, nonce_, 0, block0);
        poly_.emplace(block0);
        poly_->update(aad.data(), aad.size());
        // pad AAD to 16
        if (aad.size() % 16 != 0)
            for (size_t i = aad.size() % 16; i < 16; ++i) poly_->update_byte(0);
        counter_ = 1;
    } else {
        ghash_.emplace(key.ghash);
        ghash_->update(aad.data(), aad.size());
        ghash_->pad_block();
        // J0 = nonce || 1; E_K(J0) masks the final GHASH value.
        uint8_t j0[16];
        std::memcpy(j0, nonce_, 12);
        j0[12] = 0; j0[13] = 0; j0[14] = 0; j0[15] = 1;
        key.aes.encrypt_block(j0, ek_j0_);
        counter_ = 2;
    }
}

uint8_t RecordAead::next_keystream_byte() {
    if (ks_pos_ == ks_len_) {
        if (key_->algo == AeadAlgo::Chacha20Poly1305) {
            chacha20_block(key_->chacha_key, nonce_, counter_++, ks_);
            ks_len_ = 64;
        } else {
            uint8_t ctr_block[16];
            std::memcpy(ctr_block, nonce_, 12);
            write_be32(ctr_block + 12, counter_++);
            key_->aes.encrypt_block(ctr_block, ks_);
            ks_len_ = 16;
        }
        ks_pos_ = 0;
    }
    return ks_[ks_pos_++];
}

uint8_t RecordAead::process_byte(uint8_t b) {
    const uint8_t out = b ^ next_keystream_byte();
    const uint8_t ct = dir_ == AeadDir::Open ? b : out;
    if (poly_)
        poly_->update_byte(ct);
    else
        ghash_->update_byte(ct);
    ++data_len_;
    return out;
}

void RecordAead::finalize(uint8_t tag[kTagLen]) {
    if (poly_) {
        if (data_len_ % 16 != 0)
            for (uint64_t i = data_len_ % 16; i < 16; ++i) poly_->update_byte(0);
        uint8_t lens[16];
        write_le64(lens, aad_len_);
        write_le64(lens + 8, data_len_);
        poly_->update(lens, 16);
        poly_->digest(tag);
    } else {
        ghash_->pad_block();
        uint8_t lens[16];
        write_be64(lens, aad_len_ * 8);
        write_be64(lens + 8, data_len_ * 8);
        ghash_->update(lens, 16);
        ghash_->digest(tag);
        for (int i = 0; i < 16; ++i) tag[i] ^= ek_j0_[i];
    }
    active_ = false;
    poly_.reset();
    ghash_.reset();
}

Bytes aead_seal(const AeadKey& key, const uint8_t nonce[kNonceLen], ByteSpan aad, ByteSpan plain) {
    RecordAead ctx;
    ctx.init(key, AeadDir::Seal, nonce, aad);
    Bytes out(plain.size() + kTagLen);
    for (size_t i = 0; i < plain.size(); ++i) out[i] = ctx.process_byte(plain[i]);
    ctx.finalize(out.data() + plain.size());
    return out;
}

std::optional<Bytes> aead_open(const AeadKey& key, const uint8_t nonce[kNonceLen], ByteSpan aad,
                               ByteSpan ct_and_tag) {
    if (ct_and_tag.size() < kTagLen) return std::nullopt;
    const size_t n = ct_and_tag.size() - kTagLen;
    RecordAead ctx;
    ctx.init(key, AeadDir::Open, nonce, aad);
    Bytes out(n);
    for (size_t i = 0; i < n; ++i) out[i] = ctx.process_byte(ct_and_tag[i]);
    uint8_t tag[16];
    ctx.finalize(tag);
    if (!ct_equal16(tag, ct_and_tag.data() + n)) return std::nullopt;
    return out;
}

}  // namespace balboa::crypto
