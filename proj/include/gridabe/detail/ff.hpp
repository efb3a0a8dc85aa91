#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace gridabe::detail {

// Prime-field element in Montgomery form, generic over the limb count and
// field parameters supplied by a tag type:
//
//   struct Tag {
//     static constexpr std::size_t kLimbs;
//     static constexpr std::array<std::uint64_t, kLimbs> kMod;   // the prime
//     static constexpr std::uint64_t kInv;                       // -mod^-1 mod 2^64
//     static constexpr std::array<std::uint64_t, kLimbs> kR1;    // 2^(64n) mod p
//     static constexpr std::array<std::uint64_t, kLimbs> kR2;    // R^2 mod p
//     static constexpr std::array<std::uint64_t, kLimbs> kModMinus2;
//   };
//
// Not constant-time: this library targets reproducible simulation and
// benchmarking, not production key handling.
template <typename Tag>
class MontFp {
 public:
  static constexpr std::size_t kLimbs = Tag::kLimbs;
  using Limbs = std::array<std::uint64_t, kLimbs>;
  using u128 = unsigned __int128;

  Limbs v{};  // Montgomery residue, always < mod

  constexpr MontFp() = default;

  static MontFp zero() { return MontFp{}; }

  static MontFp one() {
    MontFp r;
    r.v = Tag::kR1;
    return r;
  }

  static MontFp from_u64(std::uint64_t x) {
    Limbs raw{};
    raw[0] = x;
    return from_raw(raw);
  }

  // raw must already be reduced below the modulus
  static MontFp from_raw(const Limbs& raw) {
    MontFp r;
    r.v = mont_mul(raw, Tag::kR2);
    return r;
  }

  // canonical integer limbs, little-endian
  Limbs to_raw() const {
    Limbs one_limbs{};
    one_limbs[0] = 1;
    return mont_mul(v, one_limbs);
  }

  bool is_zero() const {
    for (auto x : v)
      if (x) return false;
    return true;
  }

  friend bool operator==(const MontFp& a, const MontFp& b) { return a.v == b.v; }
  friend bool operator!=(const MontFp& a, const MontFp& b) { return !(a.v == b.v); }

  friend MontFp operator+(const MontFp& a, const MontFp& b) {
    MontFp r;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 t = (u128)a.v[i] + b.v[i] + carry;
      r.v[i] = (std::uint64_t)t;
      carry = (std::uint64_t)(t >> 64);
    }
    if (carry || geq(r.v, Tag::kMod)) sub_in_place(r.v, Tag::kMod);
    return r;
  }

  friend MontFp operator-(const MontFp& a, const MontFp& b) {
    MontFp r;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 t = (u128)a.v[i] - b.v[i] - borrow;
      r.v[i] = (std::uint64_t)t;
      borrow = (std::uint64_t)(t >> 64) ? 1 : 0;
    }
    if (borrow) {
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < kLimbs; ++i) {
        u128 t = (u128)r.v[i] + Tag::kMod[i] + carry;
        r.v[i] = (std::uint64_t)t;
        carry = (std::uint64_t)(t >> 64);
      }
    }
    return r;
  }

  friend MontFp operator*(const MontFp& a, const MontFp& b) {
    MontFp r;
    r.v = mont_mul(a.v, b.v);
    return r;
  }

  MontFp neg() const {
    if (is_zero()) return *this;
    MontFp r;
    r.v = Tag::kMod;
    sub_in_place(r.v, v);
    return r;
  }

  MontFp dbl() const { return *this + *this; }

  MontFp square() const { return *this * *this; }

  template <std::size_t M>
  MontFp pow(const std::array<std::uint64_t, M>& e) const {
    MontFp acc = one();
    bool seen = false;
    for (std::size_t li = M; li-- > 0;) {
      for (int bi = 63; bi >= 0; --bi) {
        if (seen) acc = acc.square();
        if ((e[li] >> bi) & 1) {
          acc = acc * *this;
          seen = true;
        }
      }
    }
    return acc;
  }

  MontFp pow_u64(std::uint64_t e) const { return pow(std::array<std::uint64_t, 1>{e}); }

  // Fermat inversion; inverse of zero is zero (callers reject zero first)
  MontFp inverse() const { return pow(Tag::kModMinus2); }

  // integer comparison of canonical values
  static bool geq(const Limbs& a, const Limbs& b) {
    for (std::size_t i = kLimbs; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
  }

 private:
  static void sub_in_place(Limbs& a, const Limbs& b) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < kLimbs; ++i) {
      u128 t = (u128)a[i] - b[i] - borrow;
      a[i] = (std::uint64_t)t;
      borrow = (std::uint64_t)(t >> 64) ? 1 : 0;
    }
  }

  // CIOS Montgomery multiplication: returns a*b*R^-1 mod p
  static Limbs mont_mul(const Limbs& a, const Limbs& b) {
    std::array<std::uint64_t, kLimbs + 2> t{};
    for (std::size_t i = 0; i < kLimbs; ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < kLimbs; ++j) {
        u128 cur = (u128)t[j] + (u128)a[j] * b[i] + carry;
        t[j] = (std::uint64_t)cur;
        carry = (std::uint64_t)(cur >> 64);
      }
      u128 cur = (u128)t[kLimbs] + carry;
      t[kLimbs] = (std::uint64_t)cur;
      t[kLimbs + 1] = (std::uint64_t)(cur >> 64);

      std::uint64_t m = t[0] * Tag::kInv;
      u128 c2 = (u128)t[0] + (u128)m * Tag::kMod[0];
      carry = (std::uint64_t)(c2 >> 64);
      for (std::size_t j = 1; j < kLimbs; ++j) {
        u128 c3 = (u128)t[j] + (u128)m * Tag::kMod[j] + carry;
        t[j - 1] = (std::uint64_t)c3;
        carry = (std::uint64_t)(c3 >> 64);
      }
      u128 c4 = (u128)t[kLimbs] + carry;
      t[kLimbs - 1] = (std::uint64_t)c4;
      t[kLimbs] = t[kLimbs + 1] + (std::uint64_t)(c4 >> 64);
      t[kLimbs + 1] = 0;
    }
    Limbs r;
    for (std::size_t i = 0; i < kLimbs; ++i) r[i] = t[i];
    if (t[kLimbs] || geq(r, Tag::kMod)) sub_in_place(r, Tag::kMod);
    return r;
  }
};

}  // namespace gridabe::detail
