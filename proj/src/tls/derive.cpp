// SPDX-License-Identifier: Apache-2.0
#include <cassert>
#include <cstring>

#include "balboa/crypto/blake3.hpp"
#include "balboa/tls/prf.hpp"
#include "balboa/tls/secrets.hpp"

namespace balboa::tls {

DirectionKeyPair derive_direction_keys(const SessionSecrets& secrets) {
    const SuiteInfo info = suite_info(secrets.suite);
    const size_t block_len = 2 * info.key_len + 2 * info.fixed_iv_len;

    Bytes seed(2 * kRandomLen);
    std::memcpy(seed.data(), secrets.server_random.data(), kRandomLen);
    std::memcpy(seed.data() + kRandomLen, secrets.client_random.data(), kRandomLen);

    const Bytes block =
        tls12_prf(info.prf, secrets.master_secret, "key expansion", seed, block_len);

    auto slice = [&](size_t off, size_t len) {
        return Bytes(block.begin() + static_cast<long>(off),
                     block.begin() + static_cast<long>(off + len));
    };
    DirectionKeyPair keys;
    keys.client_write.aead_key = slice(0, info.key_len);
    keys.server_write.aead_key = slice(info.key_len, info.key_len);
    keys.client_write.implicit_iv = slice(2 * info.key_len, info.fixed_iv_len);
    keys.server_write.implicit_iv = slice(2 * info.key_len + info.fixed_iv_len, info.fixed_iv_len);
    return keys;
}

CovertKeys derive_covert_keys(ByteSpan master_secret, ByteSpan pre_shared_key,
                              CipherSuite suite) {
    assert(!pre_shared_key.empty());
    Bytes material(master_secret.size() + pre_shared_key.size());
    std::memcpy(material.data(), master_secret.data(), master_secret.size());
    std::memcpy(material.data() + master_secret.size(), pre_shared_key.data(),
                pre_shared_key.size());

    CovertKeys out;
    out.k_prime.resize(suite_info(suite).key_len);
    crypto::blake3_derive_key("balboa-reenc", material, out.k_prime.data(), out.k_prime.size());
    crypto::blake3_derive_key("balboa-client", material, out.k_client.data(), 16);
    crypto::blake3_derive_key("balboa-server", material, out.k_server.data(), 16);
    return out;
}

}  // namespace balboa::tls
