#pragma once

#include <array>
#include <cstdint>

#include "gridabe/detail/fp_tower.hpp"

namespace gridabe::detail {

// Jacobian-coordinate point on y^2 = x^3 + b; (x, y, 0) encodes infinity.
// F is Fp (base curve) or Fp2 (twist).
template <typename F>
struct JacPoint {
  F x, y, z;

  static JacPoint infinity() { return {F::one(), F::one(), F::zero()}; }

  static JacPoint from_affine(const F& ax, const F& ay) { return {ax, ay, F::one()}; }

  bool is_infinity() const { return z.is_zero(); }

  JacPoint neg() const { return {x, y.neg(), z}; }

  JacPoint dbl() const {
    if (is_infinity()) return *this;
    F a = x.square();
    F b = y.square();
    F c = b.square();
    F d = ((x + b).square() - a - c).dbl();
    F e = a + a + a;
    F f = e.square();
    F x3 = f - d.dbl();
    F y3 = e * (d - x3) - c.dbl().dbl().dbl();
    F z3 = (y * z).dbl();
    return {x3, y3, z3};
  }

  JacPoint add(const JacPoint& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    F z1z1 = z.square();
    F z2z2 = o.z.square();
    F u1 = x * z2z2;
    F u2 = o.x * z1z1;
    F s1 = y * o.z * z2z2;
    F s2 = o.y * z * z1z1;
    F h = u2 - u1;
    F r = s2 - s1;
    if (h.is_zero()) {
      if (r.is_zero()) return dbl();
      return infinity();
    }
    F h2 = h.square();
    F h3 = h * h2;
    F x3 = r.square() - h3 - (u1 * h2).dbl();
    F y3 = r * (u1 * h2 - x3) - s1 * h3;
    F z3 = z * o.z * h;
    return {x3, y3, z3};
  }

  template <std::size_t M>
  JacPoint mul(const std::array<std::uint64_t, M>& e) const {
    JacPoint acc = infinity();
    bool seen = false;
    for (std::size_t li = M; li-- > 0;) {
      for (int bi = 63; bi >= 0; --bi) {
        if (seen) acc = acc.dbl();
        if ((e[li] >> bi) & 1) {
          acc = seen ? acc.add(*this) : *this;
          seen = true;
        }
      }
    }
    return acc;
  }

  // affine (x, y); must not be infinity
  std::pair<F, F> to_affine() const {
    F zi = z.inverse();
    F zi2 = zi.square();
    return {x * zi2, y * zi2 * zi};
  }

  bool on_curve(const F& b) const {
    if (is_infinity()) return true;
    F z2 = z.square();
    F z6 = z2 * z2 * z2;
    return y.square() == x.square() * x + b * z6;
  }

  friend bool operator==(const JacPoint& a, const JacPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    F az2 = a.z.square();
    F bz2 = b.z.square();
    if (a.x * bz2 != b.x * az2) return false;
    return a.y * bz2 * b.z == b.y * az2 * a.z;
  }
  friend bool operator!=(const JacPoint& a, const JacPoint& b) { return !(a == b); }
};

using G1Point = JacPoint<Fp>;
using G2Point = JacPoint<Fp2>;

inline Fp g1_b() { return Fp::from_u64(4); }
inline Fp2 g2_b() { return Fp2::from_raw(bls_constants::kTwistB); }

inline G1Point g1_generator() {
  return G1Point::from_affine(Fp::from_raw(bls_constants::kG1X), Fp::from_raw(bls_constants::kG1Y));
}

inline G2Point g2_generator() {
  return G2Point::from_affine(Fp2::from_raw(bls_constants::kG2X),
                              Fp2::from_raw(bls_constants::kG2Y));
}

template <typename P>
inline bool in_r_subgroup(const P& pt) {
  return pt.mul(bls_constants::kR).is_infinity();
}

}  // namespace gridabe::detail
