#pragma once

#include <sodium.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <string_view>

#include "gridabe/hash.hpp"

namespace gridabe {

// Deterministic randomness: a ChaCha20 keystream keyed by BLAKE2b(seed).
// Every run with the same seed and the same draw order produces identical
// values, which is what makes transcripts and benchmarks replayable.
// Not a source of secrets for real deployments.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) {
    std::uint8_t s[8];
    for (int i = 0; i < 8; ++i) s[i] = std::uint8_t(seed >> (8 * i));
    key_ = blake2b32("gridabe.rng.v1", {BytesView{s, 8}});
  }

  // independent stream; forking never disturbs the parent's draw sequence
  DetRng fork(std::string_view label) const {
    DetRng child(key_, blake2b32("gridabe.rng.fork.v1", {BytesView{key_.data(), key_.size()},
                                                         as_bytes(label)}));
    return child;
  }

  void fill(void* out, std::size_t n) {
    sodium_ready();
    std::uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {0};
    std::uint64_t c = call_++;
    std::memcpy(nonce, &c, sizeof c);
    crypto_stream_chacha20(static_cast<std::uint8_t*>(out), n, nonce, key_.data());
  }

  std::uint64_t u64() {
    std::uint64_t x;
    fill(&x, sizeof x);
    return x;
  }

  // unbiased via rejection; n must be nonzero
  std::uint64_t uniform_below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    for (;;) {
      std::uint64_t x = u64();
      if (x < limit) return x % n;
    }
  }

  std::array<std::uint8_t, 24> nonce24() {
    std::array<std::uint8_t, 24> out;
    fill(out.data(), out.size());
    return out;
  }

  std::array<std::uint8_t, 32> key32() {
    std::array<std::uint8_t, 32> out;
    fill(out.data(), out.size());
    return out;
  }

 private:
  DetRng(const std::array<std::uint8_t, 32>&, const std::array<std::uint8_t, 32>& key)
      : key_(key) {}

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t call_ = 0;
};

}  // namespace gridabe
