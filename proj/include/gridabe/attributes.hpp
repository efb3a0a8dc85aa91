#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridabe/hash.hpp"

namespace gridabe {

inline constexpr std::size_t kMaxAttributes = 4096;

// Small-universe attribute set. Ids are 1-based and assigned in label order
// of construction; every key and ciphertext in a deployment must be built
// against the same universe, which the digest makes checkable.
class AttributeUniverse {
 public:
  AttributeUniverse() = default;

  explicit AttributeUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("empty attribute universe");
    if (labels_.size() > kMaxAttributes) throw std::invalid_argument("attribute universe too large");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw std::invalid_argument("empty attribute label");
      auto [it, fresh] = by_label_.emplace(labels_[i], std::uint32_t(i + 1));
      if (!fresh) throw std::invalid_argument("duplicate attribute label: " + labels_[i]);
    }
  }

  std::size_t size() const { return labels_.size(); }

  bool has(std::uint32_t id) const { return id >= 1 && id <= labels_.size(); }

  const std::string& label(std::uint32_t id) const {
    if (!has(id)) throw std::invalid_argument("unknown attribute id");
    return labels_[id - 1];
  }

  std::uint32_t id_of(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw std::invalid_argument("unknown attribute label: " + label);
    return it->second;
  }

  const std::vector<std::string>& labels() const { return labels_; }

  // order-sensitive digest; two parties agree on the universe iff it matches
  std::string digest() const {
    Bytes joined;
    for (const auto& l : labels_) {
      joined.insert(joined.end(), l.begin(), l.end());
      joined.push_back(0);
    }
    return digest_hex(joined);
  }

  friend bool operator==(const AttributeUniverse& a, const AttributeUniverse& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::uint32_t> by_label_;
};

}  // namespace gridabe
