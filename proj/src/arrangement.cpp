#include "arrdmod/arrangement.hpp"

#include <functional>

#include "arrdmod/error.hpp"
#include "arrdmod/poset.hpp"

namespace arrdmod {

namespace {

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

// Calls fn on every k-subset of {0..m-1} in lexicographic order; stops
// early when fn returns false. Returns false iff stopped early.
bool for_each_subset(std::size_t m, std::size_t k,
                     const std::function<bool(const IndexSet&)>& fn) {
  if (k > m) return true;
  IndexSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!fn(s)) return false;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == m - k + i - 1) --i;
    if (i == 0) return true;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::string variable_name(std::size_t i, std::size_t n) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

}  // namespace

Hyperplane::Hyperplane(std::vector<Rational> normal, Rational constant) {
  bool zero = true;
  for (const auto& v : normal)
    if (v != 0) zero = false;
  if (zero) throw ValidationError("hyperplane has a zero normal vector");

  std::vector<Rational> all(normal.begin(), normal.end());
  all.push_back(constant);
  const Integer scale = lcm_of_denominators(all);
  Integer g = 0;
  for (auto& v : all) {
    v *= scale;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  std::size_t lead = 0;
  while (all[lead] == 0) ++lead;
  if (all[lead] < 0) g = -g;
  for (auto& v : all) v /= g;

  eq_.constant = all.back();
  all.pop_back();
  eq_.normal = std::move(all);
}

Rational Hyperplane::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim()) throw ValidationError("point dimension mismatch");
  Rational v = eq_.constant;
  for (std::size_t i = 0; i < point.size(); ++i) v += eq_.normal[i] * point[i];
  return v;
}

std::string to_string(const Hyperplane& h) {
  std::string out;
  auto term = [&out](const Rational& coeff, const std::string& var) {
    if (coeff == 0) return;
    Rational mag = abs(coeff);
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (var.empty() || mag != 1) out += to_string(mag);
    out += var;
  };
  for (std::size_t i = 0; i < h.dim(); ++i) term(h.normal()[i], variable_name(i, h.dim()));
  term(h.constant(), "");
  return out;
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    if (hyperplanes_[i].dim() != dim_) {
      throw ValidationError("hyperplane " + std::to_string(i + 1) + " has " +
                            std::to_string(hyperplanes_[i].dim()) +
                            " coefficients, expected " + std::to_string(dim_));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (hyperplanes_[i] == hyperplanes_[j]) {
        throw ValidationError("hyperplanes " + std::to_string(j + 1) + " and " +
                              std::to_string(i + 1) + " coincide");
      }
    }
  }
}

std::vector<AffineEquation> Arrangement::equations() const {
  std::vector<AffineEquation> out;
  out.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) out.push_back(h.equation());
  return out;
}

std::vector<AffineEquation> Arrangement::equations(const IndexSet& subset) const {
  std::vector<AffineEquation> out;
  out.reserve(subset.size());
  for (auto i : subset) {
    if (i >= hyperplanes_.size()) {
      throw ValidationError("hyperplane index " + std::to_string(i + 1) + " out of range");
    }
    out.push_back(hyperplanes_[i].equation());
  }
  return out;
}

Classification classify(const Arrangement& arr, const Limits& limits) {
  const std::size_t n = arr.dim();
  const std::size_t m = arr.size();
  if (m > limits.classify_max) {
    throw ResourceError("classify supports at most " + std::to_string(limits.classify_max) +
                        " hyperplanes, got " + std::to_string(m));
  }

  Classification out;
  out.common_intersection = intersect(n, arr.equations());
  out.central = !out.common_intersection.is_empty();

  const std::size_t p = std::min(m, n);
  bool independent = for_each_subset(m, p, [&](const IndexSet& s) {
    Matrix normals(0, n);
    for (auto i : s) normals.append_row(arr[i].normal());
    return rref(std::move(normals)).rank == p;
  });
  bool no_excess = for_each_subset(m, n + 1, [&](const IndexSet& s) {
    return intersect(n, arr.equations(s)).is_empty();
  });
  out.general_position = independent && no_excess;

  out.normal_crossing = true;
  for (const auto& flat : detail::enumerate_flats_unbounded(arr)) {
    if (flat.closure.size() != flat.codim) {
      out.normal_crossing = false;
      break;
    }
  }
  return out;
}

Essentialization essentialize(const Arrangement& arr) {
  const std::size_t n = arr.dim();
  const AffineSubspace common = intersect(n, arr.equations());
  EssentialSplit identity{std::vector<Rational>(n), {}, true};
  for (std::size_t j = 0; j < n; ++j) identity.pivot_coordinates.push_back(j);
  if (common.is_empty() || common.dim() == 0) return {arr, identity};

  Matrix normals(0, n);
  for (const auto& h : arr.hyperplanes()) normals.append_row(h.normal());
  const auto pivots = rref(std::move(normals)).pivots;

  // Every hyperplane contains the base point, so each restricted form is
  // linear in the pivot coordinates with zero constant.
  std::vector<Hyperplane> restricted;
  restricted.reserve(arr.size());
  for (const auto& h : arr.hyperplanes()) {
    std::vector<Rational> normal;
    normal.reserve(pivots.size());
    for (auto j : pivots) normal.push_back(h.normal()[j]);
    restricted.emplace_back(std::move(normal), Rational(0));
  }
  return {Arrangement(pivots.size(), std::move(restricted)),
          EssentialSplit{common.base_point(), pivots, false}};
}

}  // namespace arrdmod
