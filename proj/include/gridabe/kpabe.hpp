#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gridabe/access_tree.hpp"
#include "gridabe/aead.hpp"
#include "gridabe/attributes.hpp"
#include "gridabe/codec.hpp"
#include "gridabe/powers.hpp"
#include "gridabe/rng.hpp"

namespace gridabe {

// per reporting unit; enforced on the protocol submission path
inline constexpr std::size_t kMaxPayloadBytes = 1u << 20;

// sanity cap for the shared hybrid wrap; the aggregate baseline pushes a
// whole round's concatenated payloads through one encryption
inline constexpr std::size_t kMaxAggregateBytes = 64u << 20;

// binary access-tree layout shared by key artifacts (pre-order, id-based)
inline void write_policy(ByteWriter& w, const PolicyNode& node) {
  if (node.is_leaf()) {
    w.u8(0);
    w.u32(node.attr);
    return;
  }
  w.u8(1);
  w.u32(node.threshold);
  w.u32(std::uint32_t(node.children.size()));
  for (const auto& c : node.children) write_policy(w, c);
}

namespace detail_kpabe {
inline std::optional<PolicyNode> read_policy_at(ByteReader& r, std::size_t depth,
                                                std::size_t& leaves) {
  if (depth > kMaxPolicyDepth) return std::nullopt;
  std::uint8_t kind = r.u8();
  if (!r.ok()) return std::nullopt;
  if (kind == 0) {
    std::uint32_t attr = r.u32();
    if (!r.ok() || attr == 0 || ++leaves > kMaxPolicyLeaves) return std::nullopt;
    return PolicyNode::leaf(attr);
  }
  if (kind != 1) return std::nullopt;
  std::uint32_t k = r.u32();
  std::uint32_t n = r.u32();
  if (!r.ok() || n == 0 || n > kMaxPolicyLeaves || k < 1 || k > n) return std::nullopt;
  std::vector<PolicyNode> kids;
  kids.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto c = read_policy_at(r, depth + 1, leaves);
    if (!c) return std::nullopt;
    kids.push_back(std::move(*c));
  }
  return PolicyNode::gate(k, std::move(kids));
}
}  // namespace detail_kpabe

inline std::optional<PolicyNode> read_policy(ByteReader& r) {
  std::size_t leaves = 0;
  return detail_kpabe::read_policy_at(r, 1, leaves);
}

// Public parameters of the key-policy ABE instance: one group element per
// universe attribute, the pairing value Y = e(g,g)^y that blinds messages,
// and A = g^alpha used by the assisted-decryption path.
template <typename B>
struct PublicKey {
  AttributeUniverse universe;
  std::vector<typename B::G1> t_pub;  // t_pub[id-1] = g^{t_id}
  typename B::Gt y_pub;
  typename B::G2 a_pub;

  Bytes to_bytes() const {
    ByteWriter w;
    w.header(B::kBackendId, ArtifactKind::kPublicKey);
    w.u32(std::uint32_t(universe.size()));
    for (const auto& l : universe.labels()) w.str(l);
    for (const auto& t : t_pub) put_elem(w, kTagG1, t);
    put_elem(w, kTagGt, y_pub);
    put_elem(w, kTagG2, a_pub);
    return w.take();
  }

  static std::optional<PublicKey> from_bytes(BytesView in) {
    ByteReader r(in);
    if (!r.header(B::kBackendId, ArtifactKind::kPublicKey)) return std::nullopt;
    std::uint32_t n = r.u32();
    if (!r.ok() || n == 0 || n > kMaxAttributes) return std::nullopt;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) labels.push_back(r.str());
    PublicKey pk;
    try {
      pk.universe = AttributeUniverse(std::move(labels));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    pk.t_pub.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto t = get_elem<typename B::G1>(r, kTagG1);
      if (!t) return std::nullopt;
      pk.t_pub.push_back(*t);
    }
    auto y = get_elem<typename B::Gt>(r, kTagGt);
    auto a = get_elem<typename B::G2>(r, kTagG2);
    if (!y || !a || !r.done()) return std::nullopt;
    pk.y_pub = *y;
    pk.a_pub = *a;
    return pk;
  }
};

template <typename B>
struct MasterKey {
  std::vector<typename B::Scalar> t;  // nonzero, pairwise distinct
  typename B::Scalar y;               // nonzero
  typename B::Scalar alpha;           // nonzero

  Bytes to_bytes() const {
    ByteWriter w;
    w.header(B::kBackendId, ArtifactKind::kMasterKey);
    w.u32(std::uint32_t(t.size()));
    for (const auto& ti : t) put_elem(w, kTagScalar, ti);
    put_elem(w, kTagScalar, y);
    put_elem(w, kTagScalar, alpha);
    return w.take();
  }

  static std::optional<MasterKey> from_bytes(BytesView in) {
    ByteReader r(in);
    if (!r.header(B::kBackendId, ArtifactKind::kMasterKey)) return std::nullopt;
    std::uint32_t n = r.u32();
    if (!r.ok() || n == 0 || n > kMaxAttributes) return std::nullopt;
    MasterKey mk;
    mk.t.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto ti = get_elem<typename B::Scalar>(r, kTagScalar);
      if (!ti) return std::nullopt;
      mk.t.push_back(*ti);
    }
    auto y = get_elem<typename B::Scalar>(r, kTagScalar);
    auto a = get_elem<typename B::Scalar>(r, kTagScalar);
    if (!y || !a || !r.done()) return std::nullopt;
    mk.y = *y;
    mk.alpha = *a;
    return mk;
  }
};

// master scalars are nonzero and the per-attribute exponents pairwise
// distinct, so every T_u is a distinct non-identity element
template <typename B>
std::pair<PublicKey<B>, MasterKey<B>> setup(const AttributeUniverse& universe, DetRng& rng) {
  using S = typename B::Scalar;
  MasterKey<B> mk;
  std::set<S> seen;
  while (mk.t.size() < universe.size()) {
    S cand = S::sample_nonzero(rng);
    if (seen.insert(cand).second) mk.t.push_back(cand);
  }
  mk.y = S::sample_nonzero(rng);
  mk.alpha = S::sample_nonzero(rng);

  PublicKey<B> pk;
  pk.universe = universe;
  pk.t_pub.reserve(universe.size());
  auto g1 = B::G1::generator();
  for (const auto& ti : mk.t) pk.t_pub.push_back(g1.exp(ti));
  pk.y_pub = B::pair(g1, B::G2::generator()).exp(mk.y);
  pk.a_pub = B::G2::generator().exp(mk.alpha);
  return {std::move(pk), std::move(mk)};
}

// Key for one access policy: component d[x] = g^{q_x(0)/t_attr(x)} per leaf
// in pre-order. Policies travel inside keys in id form, so a key artifact is
// self-contained given the public parameters.
template <typename B>
struct DecryptionKey {
  PolicyNode policy;
  std::vector<typename B::G2> d;

  Bytes to_bytes() const {
    ByteWriter w;
    w.header(B::kBackendId, ArtifactKind::kDecryptionKey);
    write_policy(w, policy);
    w.u32(std::uint32_t(d.size()));
    for (const auto& dx : d) put_elem(w, kTagG2, dx);
    return w.take();
  }

  static std::optional<DecryptionKey> from_bytes(BytesView in) {
    ByteReader r(in);
    if (!r.header(B::kBackendId, ArtifactKind::kDecryptionKey)) return std::nullopt;
    auto pol = read_policy(r);
    if (!pol) return std::nullopt;
    std::uint32_t n = r.u32();
    if (!r.ok() || n != count_leaves(*pol)) return std::nullopt;
    DecryptionKey key;
    key.policy = std::move(*pol);
    key.d.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto dx = get_elem<typename B::G2>(r, kTagG2);
      if (!dx) return std::nullopt;
      key.d.push_back(*dx);
    }
    if (!r.done()) return std::nullopt;
    return key;
  }
};

namespace detail_kpabe {
template <typename B>
void check_policy_ids(const PolicyNode& n, std::size_t universe_size, std::size_t depth,
                      std::size_t& leaves) {
  if (depth > kMaxPolicyDepth) throw std::invalid_argument("policy tree too deep");
  if (n.is_leaf()) {
    if (n.attr < 1 || n.attr > universe_size)
      throw std::invalid_argument("policy names an attribute outside the universe");
    if (++leaves > kMaxPolicyLeaves) throw std::invalid_argument("policy has too many leaves");
    return;
  }
  if (n.threshold < 1 || n.threshold > n.children.size())
    throw std::invalid_argument("gate threshold out of range");
  for (const auto& c : n.children) check_policy_ids<B>(c, universe_size, depth + 1, leaves);
}
}  // namespace detail_kpabe

template <typename B>
DecryptionKey<B> keygen(const MasterKey<B>& mk, const PolicyNode& policy, DetRng& rng) {
  std::size_t leaves = 0;
  detail_kpabe::check_policy_ids<B>(policy, mk.t.size(), 1, leaves);

  std::vector<KeyedLeaf<B>> shares;
  shares.reserve(leaves);
  assign_polynomials<B>(policy, mk.y, rng, shares);

  DecryptionKey<B> key;
  key.policy = policy;
  key.d.reserve(shares.size());
  auto g2 = B::G2::generator();
  for (const auto& leaf : shares)
    key.d.push_back(g2.exp(leaf.q0 * mk.t[leaf.attr - 1].inverse()));
  return key;
}

// Shared exponentiation caches for everything a sender does repeatedly:
// Y^s, e(g,A)^s and T_u^s all have fixed public bases, so a batch of
// encryptions amortizes the window tables. The pairing e(g,A) is computed
// once, on first use.
template <typename B>
class EncryptContext {
 public:
  explicit EncryptContext(PublicKey<B> pk)
      : pk_(std::move(pk)), y_tab_(pk_.y_pub, &OpCounts::gt_exps) {
    t_tabs_.reserve(pk_.t_pub.size());
    for (const auto& t : pk_.t_pub) t_tabs_.emplace_back(t, &OpCounts::g1_exps);
  }

  const PublicKey<B>& pk() const { return pk_; }

  typename B::Gt y_exp(const typename B::Scalar& s) const { return y_tab_.exp(s); }

  // e(g, A)^s, the sender-side blinding of an assisted ciphertext
  typename B::Gt ea_exp(const typename B::Scalar& s) const {
    if (!ea_tab_)
      ea_tab_.emplace(B::pair(B::G1::generator(), pk_.a_pub), &OpCounts::gt_exps);
    return ea_tab_->exp(s);
  }

  typename B::G1 t_exp(std::uint32_t attr, const typename B::Scalar& s) const {
    if (attr < 1 || attr > t_tabs_.size()) throw std::invalid_argument("unknown attribute id");
    return t_tabs_[attr - 1].exp(s);
  }

 private:
  PublicKey<B> pk_;
  FixedBaseTable<typename B::Gt> y_tab_;
  mutable std::optional<FixedBaseTable<typename B::Gt>> ea_tab_;
  std::vector<FixedBaseTable<typename B::G1>> t_tabs_;
};

// Hybrid payload wrap: a fresh group element M keys an AEAD that carries the
// actual bytes; the ABE layer only ever blinds M.
template <typename B>
struct HybridPayload {
  typename B::Gt m;
  Bytes wrapped;  // nonce || sealed data
};

namespace detail_kpabe {
inline AeadKey payload_key(BytesView m_bytes) {
  AeadKey k;
  auto d = blake2b32("gridabe.kem.v1", {m_bytes});
  std::copy(d.begin(), d.end(), k.begin());
  return k;
}
}  // namespace detail_kpabe

template <typename B>
HybridPayload<B> encode_payload(const EncryptContext<B>& ctx, DetRng& rng, BytesView data) {
  if (data.size() > kMaxAggregateBytes) throw std::invalid_argument("payload too large to wrap");
  using S = typename B::Scalar;
  HybridPayload<B> out;
  out.m = ctx.y_exp(S::sample_nonzero(rng));
  AeadKey key = detail_kpabe::payload_key(out.m.to_bytes());
  AeadNonce nonce = rng.nonce24();
  Bytes sealed = aead_seal(key, nonce, {}, data);
  out.wrapped.assign(nonce.begin(), nonce.end());
  out.wrapped.insert(out.wrapped.end(), sealed.begin(), sealed.end());
  return out;
}

template <typename B>
std::optional<Bytes> decode_payload(const typename B::Gt& m, BytesView wrapped) {
  if (wrapped.size() < kAeadNonceBytes + kAeadTagBytes) return std::nullopt;
  AeadKey key = detail_kpabe::payload_key(m.to_bytes());
  AeadNonce nonce;
  std::copy(wrapped.begin(), wrapped.begin() + kAeadNonceBytes, nonce.begin());
  return aead_open(key, nonce, {}, wrapped.subspan(kAeadNonceBytes));
}

// Baseline GPSW-style ciphertext under an attribute set gamma.
template <typename B>
struct BaselineCiphertext {
  std::vector<std::uint32_t> gamma;  // sorted, unique
  typename B::Gt e_prime;            // M * Y^s
  std::map<std::uint32_t, typename B::G1> e_attr;
  Bytes wrapped;

  Bytes to_bytes() const {
    ByteWriter w;
    w.header(B::kBackendId, ArtifactKind::kCiphertext);
    w.u32(std::uint32_t(gamma.size()));
    for (auto id : gamma) w.u32(id);
    put_elem(w, kTagGt, e_prime);
    for (const auto& [id, e] : e_attr) {
      w.u32(id);
      put_elem(w, kTagG1, e);
    }
    w.blob32(wrapped);
    return w.take();
  }

  static std::optional<BaselineCiphertext> from_bytes(BytesView in) {
    ByteReader r(in);
    if (!r.header(B::kBackendId, ArtifactKind::kCiphertext)) return std::nullopt;
    std::uint32_t n = r.u32();
    if (!r.ok() || n == 0 || n > kMaxAttributes) return std::nullopt;
    BaselineCiphertext ct;
    ct.gamma.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) ct.gamma.push_back(r.u32());
    if (!std::is_sorted(ct.gamma.begin(), ct.gamma.end()) ||
        std::adjacent_find(ct.gamma.begin(), ct.gamma.end()) != ct.gamma.end())
      return std::nullopt;
    auto ep = get_elem<typename B::Gt>(r, kTagGt);
    if (!ep) return std::nullopt;
    ct.e_prime = *ep;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t id = r.u32();
      auto e = get_elem<typename B::G1>(r, kTagG1);
      if (!e || id != ct.gamma[i]) return std::nullopt;
      ct.e_attr.emplace(id, *e);
    }
    ct.wrapped = r.blob32();
    if (!r.done()) return std::nullopt;
    return ct;
  }
};

namespace detail_kpabe {
template <typename B>
std::vector<std::uint32_t> checked_gamma(const EncryptContext<B>& ctx,
                                         std::vector<std::uint32_t> gamma) {
  if (gamma.empty()) throw std::invalid_argument("empty attribute set");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  for (auto id : gamma)
    if (!ctx.pk().universe.has(id)) throw std::invalid_argument("attribute id outside universe");
  return gamma;
}
}  // namespace detail_kpabe

template <typename B>
BaselineCiphertext<B> gpsw_encrypt(const EncryptContext<B>& ctx,
                                   const std::vector<std::uint32_t>& gamma, BytesView data,
                                   DetRng& rng) {
  using S = typename B::Scalar;
  BaselineCiphertext<B> ct;
  ct.gamma = detail_kpabe::checked_gamma(ctx, gamma);
  HybridPayload<B> hp = encode_payload(ctx, rng, data);
  ct.wrapped = std::move(hp.wrapped);
  S s = S::sample_nonzero(rng);
  ct.e_prime = hp.m.mul(ctx.y_exp(s));
  for (auto id : ct.gamma) ct.e_attr.emplace(id, ctx.t_exp(id, s));
  return ct;
}

// convenience for one-shot callers; repeated senders should hold a context
template <typename B>
BaselineCiphertext<B> gpsw_encrypt(const PublicKey<B>& pk, const std::vector<std::uint32_t>& gamma,
                                   BytesView data, DetRng& rng) {
  EncryptContext<B> ctx(pk);
  return gpsw_encrypt(ctx, gamma, data, rng);
}

template <typename B>
std::optional<Bytes> gpsw_decrypt(const DecryptionKey<B>& key, const BaselineCiphertext<B>& ct) {
  std::set<std::uint32_t> gamma(ct.gamma.begin(), ct.gamma.end());
  auto f = decrypt_node<B>(key.policy, key.d, ct.e_attr, gamma);
  if (!f) return std::nullopt;
  typename B::Gt m = ct.e_prime.mul(f->inverse());
  return decode_payload<B>(m, ct.wrapped);
}

// Holds the master key and issues policy keys; everything else sees only
// the public parameters.
template <typename B>
class Authority {
 public:
  static Authority create(const AttributeUniverse& universe, DetRng& rng) {
    auto [pk, mk] = setup<B>(universe, rng);
    return Authority(std::move(pk), std::move(mk));
  }

  const PublicKey<B>& pk() const { return pk_; }

  DecryptionKey<B> issue(const PolicyNode& policy, DetRng& rng) const {
    return keygen(mk_, policy, rng);
  }

 private:
  Authority(PublicKey<B> pk, MasterKey<B> mk) : pk_(std::move(pk)), mk_(std::move(mk)) {}
  PublicKey<B> pk_;
  MasterKey<B> mk_;
};

}  // namespace gridabe
