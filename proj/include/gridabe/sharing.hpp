#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gridabe/aead.hpp"
#include "gridabe/codec.hpp"
#include "gridabe/lagrange.hpp"
#include "gridabe/rng.hpp"

namespace gridabe {

// Dealer-free additive threshold sharing. Each contributor i picks a secret
// s_i and a polynomial f_i of degree exactly k-1 with f_i(0) = s_i; the
// round secret is s = sum s_i and the aggregated polynomial h = sum f_i
// reconstructs it from any k evaluation points. Nobody ever holds s.
template <typename B>
struct Contribution {
  typename B::Scalar s;
  Polynomial<typename B::Scalar> f;
};

template <typename B>
Contribution<B> gen_contribution(DetRng& rng, std::size_t k) {
  if (k == 0) throw std::invalid_argument("threshold must be positive");
  using S = typename B::Scalar;
  Contribution<B> c;
  c.s = S::sample_nonzero(rng);
  c.f = Polynomial<S>::sample_exact_degree(rng, k - 1, c.s);
  return c;
}

// variant for a secret fixed earlier, e.g. one already committed in a cid
template <typename B>
Contribution<B> gen_contribution(DetRng& rng, std::size_t k, const typename B::Scalar& s) {
  if (k == 0) throw std::invalid_argument("threshold must be positive");
  if (s.is_zero()) throw std::invalid_argument("contribution secret must be nonzero");
  using S = typename B::Scalar;
  Contribution<B> c;
  c.s = s;
  c.f = Polynomial<S>::sample_exact_degree(rng, k - 1, s);
  return c;
}

// Ciphertext identity: the sender's commitment g^{s_i} sealed under the
// group key shared with the pre-decryption service, plus the evaluation
// point x derived by hashing the sealed bytes. Whoever sees a cid can use
// x; only key holders can open the commitment.
template <typename B>
struct Cid {
  Bytes sealed;  // nonce || AEAD(g^{s_i})
  typename B::Scalar x;

  friend bool operator==(const Cid& a, const Cid& b) { return a.sealed == b.sealed; }

  void write(ByteWriter& w) const { w.blob32(sealed); }

  // x is recomputed from the sealed bytes, never trusted from the wire
  static std::optional<Cid> read(ByteReader& r) {
    Cid c;
    c.sealed = r.blob32();
    if (!r.ok() || c.sealed.size() < kAeadNonceBytes + kAeadTagBytes) return std::nullopt;
    c.x = derive_x(c.sealed);
    return c;
  }

  static typename B::Scalar derive_x(BytesView sealed) {
    return B::Scalar::hash_to_nonzero_scalar("gridabe.cid.x.v1", {sealed});
  }
};

template <typename B>
Cid<B> make_cid(const AeadKey& group_key, DetRng& rng, const typename B::G1& y_prime) {
  Cid<B> c;
  AeadNonce nonce = rng.nonce24();
  Bytes sealed = aead_seal(group_key, nonce, as_bytes("gridabe.cid.v1"), y_prime.to_bytes());
  c.sealed.assign(nonce.begin(), nonce.end());
  c.sealed.insert(c.sealed.end(), sealed.begin(), sealed.end());
  c.x = Cid<B>::derive_x(c.sealed);
  return c;
}

template <typename B>
typename B::G1 open_cid(const AeadKey& group_key, const Cid<B>& cid) {
  if (cid.sealed.size() < kAeadNonceBytes + kAeadTagBytes)
    throw std::runtime_error("cid too short");
  if (Cid<B>::derive_x(cid.sealed) != cid.x) throw std::runtime_error("cid point mismatch");
  AeadNonce nonce;
  std::copy(cid.sealed.begin(), cid.sealed.begin() + kAeadNonceBytes, nonce.begin());
  auto pt = aead_open(group_key, nonce, as_bytes("gridabe.cid.v1"),
                      BytesView(cid.sealed).subspan(kAeadNonceBytes));
  if (!pt) throw std::runtime_error("cid authentication failed");
  auto y_prime = B::G1::from_bytes(*pt);
  if (!y_prime) throw std::runtime_error("cid carries an invalid group element");
  return *y_prime;
}

// f_i evaluated at every roster point, own point included; a zero point
// would hand out f_i(0) = s_i directly, so it is rejected
template <typename B>
std::vector<typename B::Scalar> eval_shares(const Contribution<B>& contrib,
                                            const std::vector<typename B::Scalar>& roster_xs) {
  std::vector<typename B::Scalar> out;
  out.reserve(roster_xs.size());
  for (const auto& x : roster_xs) {
    if (x.is_zero()) throw std::invalid_argument("roster point at zero");
    out.push_back(contrib.f.eval(x));
  }
  return out;
}

// h(x_j) = sum over contributors of f_i(x_j); a missing contributor share
// would silently change the reconstructed secret, so the count is checked
template <typename B>
typename B::Scalar aggregate_h(const std::vector<typename B::Scalar>& incoming,
                               std::size_t contributor_count) {
  if (incoming.size() != contributor_count)
    throw std::invalid_argument("missing contributor share");
  typename B::Scalar acc = B::Scalar::zero();
  for (const auto& v : incoming) acc = acc + v;
  return acc;
}

namespace detail_sharing {
template <typename S, typename E>
E combine_exponent(std::size_t k, const std::vector<std::pair<S, E>>& shares) {
  if (k == 0) throw std::invalid_argument("threshold must be positive");
  if (shares.size() != k) throw std::invalid_argument("share combination needs exactly k points");
  return interpolate_exponent_at_zero(shares);
}
}  // namespace detail_sharing

// base^{h(0)} from exactly k exponent shares (x_j, base^{h(x_j)})
template <typename B>
typename B::Gt combine_gt_shares(
    std::size_t k,
    const std::vector<std::pair<typename B::Scalar, typename B::Gt>>& shares) {
  return detail_sharing::combine_exponent(k, shares);
}

template <typename B>
typename B::G1 combine_g_shares(
    std::size_t k,
    const std::vector<std::pair<typename B::Scalar, typename B::G1>>& shares) {
  return detail_sharing::combine_exponent(k, shares);
}

}  // namespace gridabe
