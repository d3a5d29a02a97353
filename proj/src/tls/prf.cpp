// SPDX-License-Identifier: Apache-2.0
#include "balboa/tls/prf.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>

#include <cstring>

namespace balboa::tls {

Bytes tls12_prf(PrfHash hash, ByteSpan secret, std::string_view label, ByteSpan seed,
                size_t out_len) {
    static EVP_MAC* hmac_impl = EVP_MAC_fetch(nullptr, "HMAC", nullptr);
    const char* md_name = hash == PrfHash::Sha256 ? "SHA256" : "SHA384";
    const size_t md_len = hash == PrfHash::Sha256 ? 32 : 48;

    Bytes label_seed(label.size() + seed.size());
    std::memcpy(label_seed.data(), label.data(), label.size());
    std::memcpy(label_seed.data() + label.size(), seed.data(), seed.size());

    OSSL_PARAM params[] = {
        OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_DIGEST, const_cast<char*>(md_name), 0),
        OSSL_PARAM_construct_end(),
    };
    auto hmac = [&](ByteSpan a, ByteSpan b) {
        Bytes out(md_len);
        size_t outl = 0;
        EVP_MAC_CTX* ctx = EVP_MAC_CTX_new(hmac_impl);
        EVP_MAC_init(ctx, secret.data(), secret.size(), params);
        EVP_MAC_update(ctx, a.data(), a.size());
        if (!b.empty()) EVP_MAC_update(ctx, b.data(), b.size());
        EVP_MAC_final(ctx, out.data(), &outl, out.size());
        EVP_MAC_CTX_free(ctx);
        return out;
    };

    Bytes out;
    out.reserve(out_len + md_len);
    Bytes a = hmac(label_seed, {});  // A(1)
    while (out.size() < out_len) {
        Bytes block = hmac(a, label_seed);
        out.insert(out.end(), block.begin(), block.end());
        a = hmac(a, {});
    }
    out.resize(out_len);
    return out;
}

}  // namespace balboa::tls
