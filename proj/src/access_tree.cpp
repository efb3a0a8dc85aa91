#include "gridabe/access_tree.hpp"

#include <nlohmann/json.hpp>

namespace gridabe {

namespace {

using nlohmann::json;

struct ParseState {
  const AttributeUniverse& universe;
  std::size_t leaves = 0;
};

PolicyNode parse_node(const json& j, ParseState& st, std::size_t depth) {
  if (depth > kMaxPolicyDepth) throw std::invalid_argument("policy tree too deep");
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("policy node must be an object with one key");

  if (j.contains("attr")) {
    const auto& a = j.at("attr");
    if (!a.is_string()) throw std::invalid_argument("attr must be a string label");
    if (++st.leaves > kMaxPolicyLeaves) throw std::invalid_argument("policy has too many leaves");
    return PolicyNode::leaf(st.universe.id_of(a.get<std::string>()));
  }

  auto parse_children = [&](const json& arr) {
    if (!arr.is_array() || arr.empty())
      throw std::invalid_argument("gate children must be a non-empty array");
    std::vector<PolicyNode> kids;
    kids.reserve(arr.size());
    for (const auto& c : arr) kids.push_back(parse_node(c, st, depth + 1));
    return kids;
  };

  if (j.contains("or")) {
    auto kids = parse_children(j.at("or"));
    return PolicyNode::gate(1, std::move(kids));
  }
  if (j.contains("and")) {
    auto kids = parse_children(j.at("and"));
    auto k = std::uint32_t(kids.size());
    return PolicyNode::gate(k, std::move(kids));
  }
  if (j.contains("threshold")) {
    const auto& t = j.at("threshold");
    if (!t.is_object() || !t.contains("k") || !t.contains("children"))
      throw std::invalid_argument("threshold gate needs k and children");
    const auto& kj = t.at("k");
    if (!kj.is_number_unsigned() || kj.get<std::uint64_t>() == 0)
      throw std::invalid_argument("threshold k must be a positive integer");
    auto kids = parse_children(t.at("children"));
    std::uint64_t k = kj.get<std::uint64_t>();
    if (k > kids.size()) throw std::invalid_argument("threshold k exceeds child count");
    return PolicyNode::gate(std::uint32_t(k), std::move(kids));
  }
  throw std::invalid_argument("unknown policy node kind");
}

json node_to_json(const PolicyNode& n, const AttributeUniverse& universe) {
  if (n.is_leaf()) return json{{"attr", universe.label(n.attr)}};
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(node_to_json(c, universe));
  if (n.threshold == 1) return json{{"or", std::move(kids)}};
  if (n.threshold == n.children.size()) return json{{"and", std::move(kids)}};
  return json{{"threshold", json{{"k", n.threshold}, {"children", std::move(kids)}}}};
}

void validate_node(const PolicyNode& n, const AttributeUniverse& universe, std::size_t depth,
                   std::size_t& leaves) {
  if (depth > kMaxPolicyDepth) throw std::invalid_argument("policy tree too deep");
  if (n.is_leaf()) {
    if (!universe.has(n.attr)) throw std::invalid_argument("policy names an unknown attribute");
    if (++leaves > kMaxPolicyLeaves) throw std::invalid_argument("policy has too many leaves");
    return;
  }
  if (n.threshold < 1 || n.threshold > n.children.size())
    throw std::invalid_argument("gate threshold out of range");
  for (const auto& c : n.children) validate_node(c, universe, depth + 1, leaves);
}

}  // namespace

PolicyNode parse_policy(const std::string& json_text, const AttributeUniverse& universe) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("policy is not valid JSON: ") + e.what());
  }
  ParseState st{universe};
  return parse_node(j, st, 1);
}

std::string policy_to_json(const PolicyNode& node, const AttributeUniverse& universe) {
  return node_to_json(node, universe).dump();
}

std::string policy_digest(const PolicyNode& node, const AttributeUniverse& universe) {
  std::string canon = policy_to_json(node, universe);
  return digest_hex(as_bytes(canon));
}

std::size_t count_leaves(const PolicyNode& node) {
  if (node.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : node.children) n += count_leaves(c);
  return n;
}

void validate_policy(const PolicyNode& node, const AttributeUniverse& universe) {
  std::size_t leaves = 0;
  validate_node(node, universe, 1, leaves);
}

}  // namespace gridabe
