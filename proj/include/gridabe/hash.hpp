#pragma once

#include <sodium.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridabe {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline void sodium_ready() {
  static const int rc = sodium_init();
  if (rc < 0) abort();
}

inline BytesView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// BLAKE2b over the concatenation of parts; domain keys every use site
inline Bytes blake2b(std::size_t out_len, std::string_view domain,
                     std::initializer_list<BytesView> parts) {
  sodium_ready();
  crypto_generichash_state st;
  crypto_generichash_init(&st, as_bytes(domain).data(), domain.size(), out_len);
  for (const auto& p : parts) crypto_generichash_update(&st, p.data(), p.size());
  Bytes out(out_len);
  crypto_generichash_final(&st, out.data(), out_len);
  return out;
}

inline std::array<std::uint8_t, 32> blake2b32(std::string_view domain,
                                              std::initializer_list<BytesView> parts) {
  Bytes d = blake2b(32, domain, parts);
  std::array<std::uint8_t, 32> out;
  std::copy(d.begin(), d.end(), out.begin());
  return out;
}

inline std::string hex_encode(BytesView b) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(b.size() * 2);
  for (auto x : b) {
    s.push_back(digits[x >> 4]);
    s.push_back(digits[x & 0xf]);
  }
  return s;
}

inline Bytes hex_decode(std::string_view s) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out;
  out.reserve(s.size() / 2);
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    int hi = nib(s[i]), lo = nib(s[i + 1]);
    if (hi < 0 || lo < 0) return {};
    out.push_back(std::uint8_t(hi << 4 | lo));
  }
  return out;
}

// short content digest used in transcripts and logs
inline std::string digest_hex(BytesView b) {
  return hex_encode(blake2b(16, "gridabe.digest.v1", {b}));
}

}  // namespace gridabe
