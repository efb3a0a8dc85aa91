#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "gridabe/hash.hpp"
#include "gridabe/ops.hpp"
#include "gridabe/rng.hpp"

// Test-only symmetric "pairing": the order-p subgroup of Z_q^* with
// q = 2p + 1 a safe prime and p ~ 2^31. The map e(a, b) = b^(dlog_g a) is
// honestly bilinear and non-degenerate but trivially breakable, which is why
// the library computes dlogs at all (baby-step giant-step). G1 == G2, so the
// symmetric-group identities the schemes assume can be exercised directly.
// Never a security backend.

namespace gridabe {

struct ToySym {
  static constexpr bool kSymmetric = true;
  static constexpr std::uint8_t kBackendId = 2;
  static constexpr const char* kName = "toy-sym";
  static constexpr std::size_t kScalarBytes = 4;
  static constexpr std::size_t kG1Bytes = 4;
  static constexpr std::size_t kG2Bytes = 4;
  static constexpr std::size_t kGtBytes = 4;

  static constexpr std::uint64_t kOrder = 2147483543ULL;  // p, prime
  static constexpr std::uint64_t kModulus = 4294967087ULL;  // q = 2p + 1, prime
  static constexpr std::uint64_t kGen = 4ULL;  // a square, hence of order p

  static std::uint64_t modmul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
  }

  static std::uint64_t modpow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e) {
      if (e & 1) acc = modmul(acc, base, m);
      base = modmul(base, base, m);
      e >>= 1;
    }
    return acc;
  }

  class Scalar {
   public:
    Scalar() = default;

    static Scalar zero() { return Scalar{}; }
    static Scalar one() { return wrap(1); }
    static Scalar from_u64(std::uint64_t x) { return wrap(x % kOrder); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
      return wrap((a.v_ + b.v_) % kOrder);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
      return wrap((a.v_ + kOrder - b.v_) % kOrder);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
      return wrap(modmul(a.v_, b.v_, kOrder));
    }
    Scalar neg() const { return wrap(v_ ? kOrder - v_ : 0); }
    Scalar inverse() const { return wrap(modpow(v_, kOrder - 2, kOrder)); }
    bool is_zero() const { return v_ == 0; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    Bytes to_bytes() const {
      Bytes out(kScalarBytes);
      for (int i = 0; i < 4; ++i) out[i] = std::uint8_t(v_ >> (8 * i));
      return out;
    }

    static std::optional<Scalar> from_bytes(BytesView b) {
      if (b.size() != kScalarBytes) return std::nullopt;
      std::uint64_t v = 0;
      for (int i = 0; i < 4; ++i) v |= std::uint64_t(b[i]) << (8 * i);
      if (v >= kOrder) return std::nullopt;
      return wrap(v);
    }

    static Scalar sample(DetRng& rng) { return wrap(rng.uniform_below(kOrder)); }
    static Scalar sample_nonzero(DetRng& rng) { return wrap(1 + rng.uniform_below(kOrder - 1)); }

    static Scalar hash_to_scalar(std::string_view domain, std::initializer_list<BytesView> parts) {
      Bytes d = blake2b(8, domain, parts);
      std::uint64_t v = 0;
      for (int i = 0; i < 8; ++i) v |= std::uint64_t(d[i]) << (8 * i);
      return wrap(v % kOrder);
    }

    static Scalar hash_to_nonzero_scalar(std::string_view domain,
                                         std::initializer_list<BytesView> parts) {
      Scalar s = hash_to_scalar(domain, parts);
      return s.is_zero() ? one() : s;
    }

    std::uint64_t value() const { return v_; }

   private:
    static Scalar wrap(std::uint64_t v) {
      Scalar s;
      s.v_ = v;
      return s;
    }
    std::uint64_t v_ = 0;
  };

  // element of the order-p subgroup; 1 is the identity
  template <int CounterSlot>
  class GroupElem {
   public:
    GroupElem() = default;

    static GroupElem generator() { return wrap(kGen); }
    static GroupElem identity() { return GroupElem{}; }

    GroupElem mul(const GroupElem& o) const { return wrap(modmul(v_, o.v_, kModulus)); }
    GroupElem exp(const Scalar& e) const {
      bump_counter();
      return wrap(modpow(v_, e.value(), kModulus));
    }
    GroupElem inverse() const { return wrap(modpow(v_, kModulus - 2, kModulus)); }
    bool is_identity() const { return v_ == 1; }
    bool is_one() const { return v_ == 1; }
    friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.v_ == b.v_; }
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }

    static GroupElem one() { return GroupElem{}; }

    Bytes to_bytes() const {
      Bytes out(4);
      for (int i = 0; i < 4; ++i) out[i] = std::uint8_t(v_ >> (8 * i));
      return out;
    }

    static std::optional<GroupElem> from_bytes(BytesView b) {
      if (b.size() != 4) return std::nullopt;
      std::uint64_t v = 0;
      for (int i = 0; i < 4; ++i) v |= std::uint64_t(b[i]) << (8 * i);
      if (v == 0 || v >= kModulus) return std::nullopt;
      if (modpow(v, kOrder, kModulus) != 1) return std::nullopt;  // subgroup check
      return wrap(v);
    }

    std::uint64_t value() const { return v_; }

    static GroupElem wrap(std::uint64_t v) {
      GroupElem g;
      g.v_ = v;
      return g;
    }

   private:
    static void bump_counter() {
      if constexpr (CounterSlot == 0) ++op_counts().g1_exps;
      if constexpr (CounterSlot == 1) ++op_counts().g2_exps;
      if constexpr (CounterSlot == 2) ++op_counts().gt_exps;
    }
    std::uint64_t v_ = 1;
  };

  using G1 = GroupElem<0>;
  using G2 = G1;  // symmetric
  using Gt = GroupElem<2>;

  // honest bilinear map: dlog of a, then b^dlog
  static Gt pair(const G1& a, const G2& b) {
    ++op_counts().pairings;
    return Gt::wrap(modpow(b.value(), dlog(a.value()), kModulus));
  }

 private:
  // baby-step giant-step in the subgroup; table built once
  static std::uint64_t dlog(std::uint64_t target) {
    static const std::uint64_t m = []() {
      std::uint64_t m = 1;
      while (m * m < kOrder) ++m;
      return m;
    }();
    static const std::unordered_map<std::uint64_t, std::uint32_t> baby = []() {
      std::unordered_map<std::uint64_t, std::uint32_t> t;
      t.reserve(m);
      std::uint64_t cur = 1;
      for (std::uint64_t j = 0; j < m; ++j) {
        t.emplace(cur, std::uint32_t(j));
        cur = modmul(cur, kGen, kModulus);
      }
      return t;
    }();
    static const std::uint64_t giant = modpow(kGen, kOrder - m % kOrder, kModulus);  // g^-m
    std::uint64_t cur = target;
    for (std::uint64_t i = 0; i <= m; ++i) {
      auto it = baby.find(cur);
      if (it != baby.end()) return (i * m + it->second) % kOrder;
      cur = modmul(cur, giant, kModulus);
    }
    abort();  // input was not in the subgroup
  }
};

}  // namespace gridabe
