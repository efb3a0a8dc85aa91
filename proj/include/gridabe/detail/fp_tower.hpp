#pragma once

#include <optional>

#include "gridabe/detail/bls12_381_constants.hpp"
#include "gridabe/detail/ff.hpp"

// Extension tower for BLS12-381:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = u + 1
//   Fp12 = Fp6[w] / (w^2 - v)

namespace gridabe::detail {

struct FpTag {
  static constexpr std::size_t kLimbs = 6;
  static constexpr std::array<std::uint64_t, 6> kMod = bls_constants::kP;
  static constexpr std::uint64_t kInv = bls_constants::kPInv;
  static constexpr std::array<std::uint64_t, 6> kR1 = bls_constants::kPR1;
  static constexpr std::array<std::uint64_t, 6> kR2 = bls_constants::kPR2;
  static constexpr std::array<std::uint64_t, 6> kModMinus2 = bls_constants::kPMinus2;
};

struct FrTag {
  static constexpr std::size_t kLimbs = 4;
  static constexpr std::array<std::uint64_t, 4> kMod = bls_constants::kR;
  static constexpr std::uint64_t kInv = bls_constants::kRInv;
  static constexpr std::array<std::uint64_t, 4> kR1 = bls_constants::kRR1;
  static constexpr std::array<std::uint64_t, 4> kR2 = bls_constants::kRR2;
  static constexpr std::array<std::uint64_t, 4> kModMinus2 = bls_constants::kRMinus2;
};

using Fp = MontFp<FpTag>;
using Fr = MontFp<FrTag>;

// a^((p+1)/4); valid square root only if a is a QR, so callers verify
inline std::optional<Fp> fp_sqrt(const Fp& a) {
  Fp r = a.pow(bls_constants::kSqrtExp);
  if (r.square() != a) return std::nullopt;
  return r;
}

// canonical sign: true if the integer value exceeds (p-1)/2
inline bool fp_is_high(const Fp& a) {
  auto raw = a.to_raw();
  return Fp::geq(raw, bls_constants::kHalfP) && raw != bls_constants::kHalfP;
}

struct Fp2 {
  Fp c0, c1;  // c0 + c1 u

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }
  static Fp2 from_raw(const bls_constants::Fp2Raw& r) {
    return {Fp::from_raw(r[0]), Fp::from_raw(r[1])};
  }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  friend bool operator==(const Fp2& a, const Fp2& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
  friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

  friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }

  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    Fp t0 = a.c0 * b.c0;
    Fp t1 = a.c1 * b.c1;
    return {t0 - t1, (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }

  Fp2 square() const {
    Fp t = c0 * c1;
    return {(c0 + c1) * (c0 - c1), t + t};
  }

  Fp2 neg() const { return {c0.neg(), c1.neg()}; }
  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
  Fp2 conj() const { return {c0, c1.neg()}; }

  Fp2 mul_by_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  // multiply by xi = 1 + u
  Fp2 mul_by_xi() const { return {c0 - c1, c0 + c1}; }

  Fp norm() const { return c0.square() + c1.square(); }

  Fp2 inverse() const {
    Fp d = norm().inverse();
    return {c0 * d, c1.neg() * d};
  }

  template <std::size_t M>
  Fp2 pow(const std::array<std::uint64_t, M>& e) const {
    Fp2 acc = one();
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
};

// complex-norm square root; self-verifying, nullopt for non-residues
inline std::optional<Fp2> fp2_sqrt(const Fp2& a) {
  if (a.is_zero()) return Fp2::zero();
  Fp half = (Fp::one() + Fp::one()).inverse();
  auto lambda = fp_sqrt(a.norm());
  if (!lambda) return std::nullopt;
  for (int branch = 0; branch < 2; ++branch) {
    Fp delta = (branch == 0) ? (a.c0 + *lambda) * half : (a.c0 - *lambda) * half;
    auto x0 = fp_sqrt(delta);
    if (!x0 || x0->is_zero()) continue;
    Fp x1 = a.c1 * half * x0->inverse();
    Fp2 r{*x0, x1};
    if (r.square() == a) return r;
  }
  // purely real / purely imaginary edge cases
  if (a.c1.is_zero()) {
    if (auto x0 = fp_sqrt(a.c0)) return Fp2{*x0, Fp::zero()};
    if (auto x1 = fp_sqrt(a.c0.neg())) return Fp2{Fp::zero(), *x1};
  }
  return std::nullopt;
}

struct Fp6 {
  Fp2 c0, c1, c2;  // c0 + c1 v + c2 v^2

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  friend bool operator==(const Fp6& a, const Fp6& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }
  friend bool operator!=(const Fp6& a, const Fp6& b) { return !(a == b); }

  friend Fp6 operator+(const Fp6& a, const Fp6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }

  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    Fp2 t0 = a.c0 * b.c0;
    Fp2 t1 = a.c1 * b.c1;
    Fp2 t2 = a.c2 * b.c2;
    Fp2 r0 = t0 + ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).mul_by_xi();
    Fp2 r1 = (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.mul_by_xi();
    Fp2 r2 = (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1;
    return {r0, r1, r2};
  }

  Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

  // multiply by v: (c0, c1, c2) -> (xi c2, c0, c1)
  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }

  Fp6 inverse() const {
    Fp2 a0 = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 a1 = c2.square().mul_by_xi() - c0 * c1;
    Fp2 a2 = c1.square() - c0 * c2;
    Fp2 f = (c0 * a0 + (c1 * a2 + c2 * a1).mul_by_xi()).inverse();
    return {a0 * f, a1 * f, a2 * f};
  }
};

struct Fp12 {
  Fp6 c0, c1;  // c0 + c1 w

  static Fp12 zero() { return {}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }
  friend bool operator==(const Fp12& a, const Fp12& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
  friend bool operator!=(const Fp12& a, const Fp12& b) { return !(a == b); }

  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    Fp6 t0 = a.c0 * b.c0;
    Fp6 t1 = a.c1 * b.c1;
    return {t0 + t1.mul_by_v(), (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1};
  }

  Fp12 square() const {
    Fp6 t = c0 * c1;
    Fp6 r0 = (c0 + c1) * (c0 + c1.mul_by_v()) - t - t.mul_by_v();
    return {r0, t + t};
  }

  // p^6 Frobenius; equals the inverse for unitary elements
  Fp12 conj() const { return {c0, c1.neg()}; }

  Fp12 inverse() const {
    Fp6 t = (c0 * c0 - (c1 * c1).mul_by_v()).inverse();
    return {c0 * t, (c1 * t).neg()};
  }

  template <std::size_t M>
  Fp12 pow(const std::array<std::uint64_t, M>& e) const {
    Fp12 acc = one();
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

  // x -> x^(p^k) for k = 1, 2, 3: conjugate the Fp2 slots for odd k, then
  // scale slot j (coefficient of w^j) by xi^(j (p^k - 1) / 6)
  Fp12 frobenius(int k) const {
    const Fp2 gw = Fp2::from_raw(bls_constants::kFrobGW[k - 1]);
    const Fp2 g1 = Fp2::from_raw(bls_constants::kFrobG1[k - 1]);
    const Fp2 g2 = Fp2::from_raw(bls_constants::kFrobG2[k - 1]);
    auto tw = [&](const Fp2& a) { return (k % 2) ? a.conj() : a; };
    Fp6 r0{tw(c0.c0), tw(c0.c1) * g1, tw(c0.c2) * g2};
    Fp6 r1{tw(c1.c0) * gw, tw(c1.c1) * (g1 * gw), tw(c1.c2) * (g2 * gw)};
    return {r0, r1};
  }
};

}  // namespace gridabe::detail
