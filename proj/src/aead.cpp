#include "gridabe/aead.hpp"

#include <sodium.h>

namespace gridabe {

Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, BytesView ad, BytesView plaintext) {
  sodium_ready();
  Bytes out(plaintext.size() + crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long out_len = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(out.data(), &out_len, plaintext.data(),
                                             plaintext.size(), ad.data(), ad.size(), nullptr,
                                             nonce.data(), key.data());
  out.resize(out_len);
  return out;
}

std::optional<Bytes> aead_open(const AeadKey& key, const AeadNonce& nonce, BytesView ad,
                               BytesView ciphertext) {
  sodium_ready();
  if (ciphertext.size() < crypto_aead_xchacha20poly1305_ietf_ABYTES) return std::nullopt;
  Bytes out(ciphertext.size() - crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long out_len = 0;
  if (crypto_aead_xchacha20poly1305_ietf_decrypt(out.data(), &out_len, nullptr, ciphertext.data(),
                                                 ciphertext.size(), ad.data(), ad.size(),
                                                 nonce.data(), key.data()) != 0)
    return std::nullopt;
  out.resize(out_len);
  return out;
}

}  // namespace gridabe
