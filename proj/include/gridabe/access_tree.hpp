#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridabe/attributes.hpp"
#include "gridabe/lagrange.hpp"
#include "gridabe/ops.hpp"
#include "gridabe/rng.hpp"

namespace gridabe {

inline constexpr std::size_t kMaxPolicyDepth = 64;
inline constexpr std::size_t kMaxPolicyLeaves = 4096;

// Threshold access tree. A node is either a leaf naming one attribute or a
// k-of-n gate over its children. Child indices are 1-based and feed the
// polynomial evaluation points, so child order is part of the policy.
struct PolicyNode {
  std::uint32_t attr = 0;            // leaf only, 1-based universe id
  std::uint32_t threshold = 0;       // gate only, 1 <= threshold <= children
  std::vector<PolicyNode> children;  // empty for leaves

  bool is_leaf() const { return children.empty(); }

  static PolicyNode leaf(std::uint32_t attr_id) {
    PolicyNode n;
    n.attr = attr_id;
    return n;
  }

  static PolicyNode gate(std::uint32_t k, std::vector<PolicyNode> kids) {
    PolicyNode n;
    n.threshold = k;
    n.children = std::move(kids);
    return n;
  }
};

// JSON policy grammar:
//   {"attr": "<label>"}
//   {"or":  [<node>, ...]}           1-of-n
//   {"and": [<node>, ...]}           n-of-n
//   {"threshold": {"k": <int>, "children": [<node>, ...]}}
// Labels resolve against the universe; malformed documents throw.
PolicyNode parse_policy(const std::string& json_text, const AttributeUniverse& universe);

// canonical re-serialization; parse(to_json(t)) reproduces t
std::string policy_to_json(const PolicyNode& node, const AttributeUniverse& universe);

// order-sensitive structural digest, stable across processes
std::string policy_digest(const PolicyNode& node, const AttributeUniverse& universe);

std::size_t count_leaves(const PolicyNode& node);

// checks structural validity independent of any universe membership
void validate_policy(const PolicyNode& node, const AttributeUniverse& universe);

inline bool satisfies(const PolicyNode& node, const std::set<std::uint32_t>& gamma) {
  if (node.is_leaf()) return gamma.count(node.attr) != 0;
  std::uint32_t hits = 0;
  for (const auto& c : node.children)
    if (satisfies(c, gamma) && ++hits >= node.threshold) return true;
  return false;
}

// Top-down secret sharing over the tree: each gate samples a random
// polynomial of degree threshold-1 whose constant term is the share it
// received, and child i receives q(i). Leaves end up with q_leaf(0), emitted
// in pre-order, which fixes the key component layout for a policy.
template <typename B>
struct KeyedLeaf {
  std::uint32_t attr;
  typename B::Scalar q0;
};

template <typename B>
void assign_polynomials(const PolicyNode& node, const typename B::Scalar& share, DetRng& rng,
                        std::vector<KeyedLeaf<B>>& out) {
  using S = typename B::Scalar;
  if (node.is_leaf()) {
    out.push_back({node.attr, share});
    return;
  }
  auto poly = Polynomial<S>::sample(rng, node.threshold - 1, share);
  for (std::size_t i = 0; i < node.children.size(); ++i)
    assign_polynomials<B>(node.children[i], poly.eval(S::from_u64(i + 1)), rng, out);
}

namespace detail_tree {

// Recursive pairing-and-interpolation walk. leaf_cursor tracks the pre-order
// position so that skipped subtrees still consume their key components.
template <typename B>
std::optional<typename B::Gt> decrypt_node_at(
    const PolicyNode& node, const std::vector<typename B::G2>& leaf_components,
    const std::map<std::uint32_t, typename B::G1>& shares, const std::set<std::uint32_t>& gamma,
    std::size_t& leaf_cursor) {
  using S = typename B::Scalar;
  using Gt = typename B::Gt;

  if (node.is_leaf()) {
    std::size_t idx = leaf_cursor++;
    if (gamma.count(node.attr) == 0) return std::nullopt;
    auto it = shares.find(node.attr);
    if (it == shares.end())
      throw std::runtime_error("ciphertext lacks a component for a satisfied leaf");
    if (idx >= leaf_components.size()) throw std::runtime_error("key has too few leaf components");
    return B::pair(it->second, leaf_components[idx]);
  }

  // collect the first `threshold` satisfied children in index order; once
  // enough are found the remaining subtrees are only walked for cursor
  // accounting, never evaluated
  std::vector<std::pair<S, Gt>> pts;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (pts.size() == node.threshold) {
      leaf_cursor += count_leaves(node.children[i]);
      continue;
    }
    auto sub = decrypt_node_at<B>(node.children[i], leaf_components, shares, gamma, leaf_cursor);
    if (sub) pts.emplace_back(S::from_u64(i + 1), *sub);
  }
  if (pts.size() < node.threshold) return std::nullopt;
  if (node.threshold == 1) return pts.front().second;
  return interpolate_exponent_at_zero(pts);
}

}  // namespace detail_tree

// Evaluates the tree against attribute-group shares (shares[u] carries the
// round secret in the exponent) and the per-leaf key components. Returns
// the blinding value at the root, or nullopt if gamma does not satisfy the
// policy. Counted once per call regardless of tree size.
template <typename B>
std::optional<typename B::Gt> decrypt_node(const PolicyNode& root,
                                           const std::vector<typename B::G2>& leaf_components,
                                           const std::map<std::uint32_t, typename B::G1>& shares,
                                           const std::set<std::uint32_t>& gamma) {
  ++op_counts().decrypt_node_runs;
  std::size_t cursor = 0;
  return detail_tree::decrypt_node_at<B>(root, leaf_components, shares, gamma, cursor);
}

}  // namespace gridabe
