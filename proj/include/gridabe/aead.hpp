#pragma once

#include <array>
#include <optional>

#include "gridabe/hash.hpp"

namespace gridabe {

inline constexpr std::size_t kAeadKeyBytes = 32;
inline constexpr std::size_t kAeadNonceBytes = 24;
inline constexpr std::size_t kAeadTagBytes = 16;

using AeadKey = std::array<std::uint8_t, kAeadKeyBytes>;
using AeadNonce = std::array<std::uint8_t, kAeadNonceBytes>;

// XChaCha20-Poly1305; ciphertext carries the tag, the nonce travels beside it
Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, BytesView ad, BytesView plaintext);

// nullopt on any authentication failure
std::optional<Bytes> aead_open(const AeadKey& key, const AeadNonce& nonce, BytesView ad,
                               BytesView ciphertext);

}  // namespace gridabe
