#pragma once

#include <optional>

#include "gridabe/detail/pairing.hpp"
#include "gridabe/hash.hpp"
#include "gridabe/ops.hpp"
#include "gridabe/rng.hpp"

// Pairing backend over BLS12-381. Groups are written multiplicatively to
// match the scheme algebra: G1/G2 elements compose with mul() and are raised
// to scalars with exp(); pair() maps G1 x G2 into Gt.
//
// Wire formats:
//   Scalar  32 bytes, canonical little-endian
//   G1      48 bytes, compressed big-endian x with flag bits in byte 0
//           (0x80 compressed, 0x40 infinity, 0x20 sign "y is the larger root")
//   G2      96 bytes, x.c1 then x.c0, same flags, sign lexicographic on
//           (y.c1, y.c0)
//   Gt      576 bytes, the twelve Fp coefficients big-endian in tower order
//           c0.c0, c0.c1, c0.c2, c1.c0, c1.c1, c1.c2, each as (re, im)

namespace gridabe {

struct Bls12_381 {
  static constexpr bool kSymmetric = false;
  static constexpr std::uint8_t kBackendId = 1;
  static constexpr const char* kName = "bls12-381";
  static constexpr std::size_t kScalarBytes = 32;
  static constexpr std::size_t kG1Bytes = 48;
  static constexpr std::size_t kG2Bytes = 96;
  static constexpr std::size_t kGtBytes = 576;

  class Scalar {
   public:
    Scalar() = default;

    static Scalar zero() { return Scalar{}; }
    static Scalar one() { return wrap(detail::Fr::one()); }
    static Scalar from_u64(std::uint64_t x) { return wrap(detail::Fr::from_u64(x)); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return wrap(a.v_ + b.v_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return wrap(a.v_ - b.v_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return wrap(a.v_ * b.v_); }
    Scalar neg() const { return wrap(v_.neg()); }
    Scalar inverse() const { return wrap(v_.inverse()); }
    bool is_zero() const { return v_.is_zero(); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // order on canonical integer values; used for deterministic share choice
    friend bool operator<(const Scalar& a, const Scalar& b) {
      auto ra = a.v_.to_raw(), rb = b.v_.to_raw();
      return ra != rb && !detail::Fr::geq(ra, rb);
    }

    Bytes to_bytes() const {
      auto raw = v_.to_raw();
      Bytes out(kScalarBytes);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 8; ++j) out[8 * i + j] = std::uint8_t(raw[i] >> (8 * j));
      return out;
    }

    static std::optional<Scalar> from_bytes(BytesView b) {
      if (b.size() != kScalarBytes) return std::nullopt;
      std::array<std::uint64_t, 4> raw{};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          raw[i] |= std::uint64_t(b[8 * i + j]) << (8 * j);
      if (detail::Fr::geq(raw, detail::FrTag::kMod)) return std::nullopt;
      return wrap(detail::Fr::from_raw(raw));
    }

    static Scalar sample(DetRng& rng) {
      for (;;) {
        std::array<std::uint64_t, 4> raw;
        rng.fill(raw.data(), sizeof raw);
        if (!detail::Fr::geq(raw, detail::FrTag::kMod)) return wrap(detail::Fr::from_raw(raw));
      }
    }

    static Scalar sample_nonzero(DetRng& rng) {
      for (;;) {
        Scalar s = sample(rng);
        if (!s.is_zero()) return s;
      }
    }

    // 64-byte digest folded into Z_r; domain-separated, never zero biased
    static Scalar hash_to_scalar(std::string_view domain, std::initializer_list<BytesView> parts) {
      Bytes d = blake2b(64, domain, parts);
      detail::Fr acc = detail::Fr::zero();
      detail::Fr shift = detail::Fr::from_raw({0, 1, 0, 0});  // 2^64
      for (int i = 7; i >= 0; --i) {
        std::uint64_t limb = 0;
        for (int j = 7; j >= 0; --j) limb = limb << 8 | d[8 * i + j];
        acc = acc * shift + detail::Fr::from_u64(limb);
      }
      return wrap(acc);
    }

    static Scalar hash_to_nonzero_scalar(std::string_view domain,
                                         std::initializer_list<BytesView> parts) {
      Scalar s = hash_to_scalar(domain, parts);
      return s.is_zero() ? one() : s;
    }

    std::array<std::uint64_t, 4> raw_limbs() const { return v_.to_raw(); }

   private:
    static Scalar wrap(const detail::Fr& v) {
      Scalar s;
      s.v_ = v;
      return s;
    }
    detail::Fr v_;
  };

  class G1 {
   public:
    G1() : p_(detail::G1Point::infinity()) {}

    static G1 generator() { return wrap(detail::g1_generator()); }
    static G1 identity() { return G1{}; }

    G1 mul(const G1& o) const { return wrap(p_.add(o.p_)); }
    G1 exp(const Scalar& e) const {
      ++op_counts().g1_exps;
      return wrap(p_.mul(e.raw_limbs()));
    }
    G1 inverse() const { return wrap(p_.neg()); }
    bool is_identity() const { return p_.is_infinity(); }
    friend bool operator==(const G1& a, const G1& b) { return a.p_ == b.p_; }
    friend bool operator!=(const G1& a, const G1& b) { return !(a == b); }

    Bytes to_bytes() const {
      Bytes out(kG1Bytes, 0);
      if (p_.is_infinity()) {
        out[0] = 0xC0;
        return out;
      }
      auto [x, y] = p_.to_affine();
      write_fp_be(out.data(), x);
      out[0] |= 0x80;
      if (detail::fp_is_high(y)) out[0] |= 0x20;
      return out;
    }

    static std::optional<G1> from_bytes(BytesView b) {
      if (b.size() != kG1Bytes || !(b[0] & 0x80)) return std::nullopt;
      if (b[0] & 0x40) {
        if (b[0] != 0xC0) return std::nullopt;
        for (std::size_t i = 1; i < kG1Bytes; ++i)
          if (b[i]) return std::nullopt;
        return G1{};
      }
      auto x = read_fp_be(b.data(), true);
      if (!x) return std::nullopt;
      auto y = detail::fp_sqrt(x->square() * *x + detail::g1_b());
      if (!y) return std::nullopt;
      bool want_high = b[0] & 0x20;
      if (detail::fp_is_high(*y) != want_high) *y = y->neg();
      auto pt = detail::G1Point::from_affine(*x, *y);
      if (!detail::in_r_subgroup(pt)) return std::nullopt;
      return wrap(pt);
    }

    const detail::G1Point& raw() const { return p_; }

   private:
    static G1 wrap(const detail::G1Point& p) {
      G1 g;
      g.p_ = p;
      return g;
    }
    detail::G1Point p_;
    friend struct Bls12_381;
  };

  class G2 {
   public:
    G2() : p_(detail::G2Point::infinity()) {}

    static G2 generator() { return wrap(detail::g2_generator()); }
    static G2 identity() { return G2{}; }

    G2 mul(const G2& o) const { return wrap(p_.add(o.p_)); }
    G2 exp(const Scalar& e) const {
      ++op_counts().g2_exps;
      return wrap(p_.mul(e.raw_limbs()));
    }
    G2 inverse() const { return wrap(p_.neg()); }
    bool is_identity() const { return p_.is_infinity(); }
    friend bool operator==(const G2& a, const G2& b) { return a.p_ == b.p_; }
    friend bool operator!=(const G2& a, const G2& b) { return !(a == b); }

    Bytes to_bytes() const {
      Bytes out(kG2Bytes, 0);
      if (p_.is_infinity()) {
        out[0] = 0xC0;
        return out;
      }
      auto [x, y] = p_.to_affine();
      write_fp_be(out.data(), x.c1);
      write_fp_be(out.data() + 48, x.c0);
      out[0] |= 0x80;
      if (fp2_is_high(y)) out[0] |= 0x20;
      return out;
    }

    static std::optional<G2> from_bytes(BytesView b) {
      if (b.size() != kG2Bytes || !(b[0] & 0x80)) return std::nullopt;
      if (b[0] & 0x40) {
        if (b[0] != 0xC0) return std::nullopt;
        for (std::size_t i = 1; i < kG2Bytes; ++i)
          if (b[i]) return std::nullopt;
        return G2{};
      }
      auto x1 = read_fp_be(b.data(), true);
      auto x0 = read_fp_be(b.data() + 48, false);
      if (!x0 || !x1) return std::nullopt;
      detail::Fp2 x{*x0, *x1};
      auto y = detail::fp2_sqrt(x.square() * x + detail::g2_b());
      if (!y) return std::nullopt;
      bool want_high = b[0] & 0x20;
      if (fp2_is_high(*y) != want_high) *y = y->neg();
      auto pt = detail::G2Point::from_affine(x, *y);
      if (!detail::in_r_subgroup(pt)) return std::nullopt;
      return wrap(pt);
    }

    const detail::G2Point& raw() const { return p_; }

   private:
    static bool fp2_is_high(const detail::Fp2& y) {
      if (!y.c1.is_zero()) return detail::fp_is_high(y.c1);
      return detail::fp_is_high(y.c0);
    }
    static G2 wrap(const detail::G2Point& p) {
      G2 g;
      g.p_ = p;
      return g;
    }
    detail::G2Point p_;
    friend struct Bls12_381;
  };

  class Gt {
   public:
    Gt() : v_(detail::Fp12::one()) {}

    static Gt one() { return Gt{}; }

    Gt mul(const Gt& o) const { return wrap(v_ * o.v_); }
    Gt exp(const Scalar& e) const {
      ++op_counts().gt_exps;
      return wrap(v_.pow(e.raw_limbs()));
    }
    // all Gt values here come from pairings, so they are unitary and the
    // p^6 conjugate is the inverse
    Gt inverse() const { return wrap(v_.conj()); }
    bool is_one() const { return v_.is_one(); }
    friend bool operator==(const Gt& a, const Gt& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Gt& a, const Gt& b) { return !(a == b); }

    Bytes to_bytes() const {
      Bytes out(kGtBytes);
      const detail::Fp2* slots[6] = {&v_.c0.c0, &v_.c0.c1, &v_.c0.c2,
                                     &v_.c1.c0, &v_.c1.c1, &v_.c1.c2};
      for (int i = 0; i < 6; ++i) {
        write_fp_be(out.data() + 96 * i, slots[i]->c0);
        write_fp_be(out.data() + 96 * i + 48, slots[i]->c1);
      }
      return out;
    }

    static std::optional<Gt> from_bytes(BytesView b) {
      if (b.size() != kGtBytes) return std::nullopt;
      detail::Fp12 v;
      detail::Fp2* slots[6] = {&v.c0.c0, &v.c0.c1, &v.c0.c2, &v.c1.c0, &v.c1.c1, &v.c1.c2};
      for (int i = 0; i < 6; ++i) {
        auto re = read_fp_be(b.data() + 96 * i, false);
        auto im = read_fp_be(b.data() + 96 * i + 48, false);
        if (!re || !im) return std::nullopt;
        *slots[i] = {*re, *im};
      }
      if (v.is_zero()) return std::nullopt;
      if (!(v * v.conj()).is_one()) return std::nullopt;  // unitarity
      return wrap(v);
    }

   private:
    static Gt wrap(const detail::Fp12& v) {
      Gt g;
      g.v_ = v;
      return g;
    }
    detail::Fp12 v_;
    friend struct Bls12_381;
  };

  static Gt pair(const G1& a, const G2& b) {
    ++op_counts().pairings;
    Gt g;
    g.v_ = detail::pairing(a.raw(), b.raw());
    return g;
  }

 private:
  static void write_fp_be(std::uint8_t* out, const detail::Fp& x) {
    auto raw = x.to_raw();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 8; ++j) out[8 * (5 - i) + (7 - j)] = std::uint8_t(raw[i] >> (8 * j));
  }

  // mask_flags clears the three flag bits from the top byte before range
  // checking (set for the coordinate that carries them)
  static std::optional<detail::Fp> read_fp_be(const std::uint8_t* in, bool mask_flags) {
    std::array<std::uint64_t, 6> raw{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 8; ++j) {
        std::uint8_t byte = in[8 * (5 - i) + (7 - j)];
        if (mask_flags && i == 5 && j == 7) byte &= 0x1F;
        raw[i] |= std::uint64_t(byte) << (8 * j);
      }
    if (detail::Fp::geq(raw, detail::FpTag::kMod)) return std::nullopt;
    return detail::Fp::from_raw(raw);
  }
};

}  // namespace gridabe
