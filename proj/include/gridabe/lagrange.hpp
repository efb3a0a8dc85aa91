#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gridabe/ops.hpp"
#include "gridabe/rng.hpp"

namespace gridabe {

// Delta_{i,S}(x) = prod_{j in S, j != i} (x - j) / (i - j)
template <typename S>
S lagrange_coeff(const S& i, const std::vector<S>& set, const S& x) {
  S num = S::one(), den = S::one();
  std::size_t hits = 0;
  for (const S& j : set) {
    if (j == i) {
      ++hits;
      continue;
    }
    num = num * (x - j);
    den = den * (i - j);
  }
  if (hits == 0) throw std::invalid_argument("point not in evaluation set");
  if (hits > 1) throw std::invalid_argument("duplicate evaluation points");
  return num * den.inverse();
}

namespace detail_lagrange {
template <typename S, typename Pt>
void check_distinct(const std::vector<std::pair<S, Pt>>& pts) {
  if (pts.empty()) throw std::invalid_argument("no interpolation points");
  for (std::size_t a = 0; a < pts.size(); ++a) {
    if (pts[a].first.is_zero()) throw std::invalid_argument("evaluation point at zero");
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (pts[a].first == pts[b].first) throw std::invalid_argument("duplicate evaluation points");
  }
}

template <typename S>
std::vector<S> xs_of(const std::vector<std::pair<S, S>>& pts) {
  std::vector<S> xs;
  xs.reserve(pts.size());
  for (const auto& [x, y] : pts) xs.push_back(x);
  return xs;
}
}  // namespace detail_lagrange

// value at zero of the unique degree < n polynomial through n points
template <typename S>
S interpolate_at_zero(const std::vector<std::pair<S, S>>& pts) {
  detail_lagrange::check_distinct(pts);
  ++op_counts().interpolations;
  std::vector<S> xs = detail_lagrange::xs_of(pts);
  S acc = S::zero();
  for (const auto& [x, y] : pts) acc = acc + y * lagrange_coeff(x, xs, S::zero());
  return acc;
}

// the same reconstruction carried out in the exponent:
// prod_j e_j ^ Delta_{x_j}(0) for group-valued shares e_j = base^(f(x_j))
template <typename S, typename E>
E interpolate_exponent_at_zero(const std::vector<std::pair<S, E>>& pts) {
  detail_lagrange::check_distinct(pts);
  ++op_counts().interpolations;
  std::vector<S> xs;
  xs.reserve(pts.size());
  for (const auto& [x, e] : pts) xs.push_back(x);
  E acc = pts.front().second.exp(lagrange_coeff(pts.front().first, xs, S::zero()));
  for (std::size_t i = 1; i < pts.size(); ++i)
    acc = acc.mul(pts[i].second.exp(lagrange_coeff(pts[i].first, xs, S::zero())));
  return acc;
}

// coefficient form, coeffs[0] the constant term
template <typename S>
struct Polynomial {
  std::vector<S> coeffs;

  S eval(const S& x) const {
    S acc = S::zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  }

  std::size_t degree_bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  // uniform coefficients above the pinned constant term
  template <typename Rng>
  static Polynomial sample(Rng& rng, std::size_t degree, const S& constant) {
    Polynomial p;
    p.coeffs.reserve(degree + 1);
    p.coeffs.push_back(constant);
    for (std::size_t i = 0; i < degree; ++i) p.coeffs.push_back(S::sample(rng));
    return p;
  }

  // degree exactly as requested: the leading coefficient is re-drawn
  // until nonzero
  template <typename Rng>
  static Polynomial sample_exact_degree(Rng& rng, std::size_t degree, const S& constant) {
    Polynomial p = sample(rng, degree, constant);
    if (degree > 0)
      while (p.coeffs.back().is_zero()) p.coeffs.back() = S::sample(rng);
    return p;
  }
};

}  // namespace gridabe
