#include "arrdmod/factors.hpp"

#include "arrdmod/error.hpp"

namespace arrdmod {

namespace {

Integer binomial_sum(std::size_t n, std::size_t k) {
  Integer total = 0;
  Integer c;
  for (std::size_t j = 0; j <= std::min(n, k); ++j) {
    mpz_bin_uiui(c.get_mpz_t(), k, j);
    total += c;
  }
  return total;
}

}  // namespace

IndexSet ExponentVector::integer_indices() const {
  IndexSet out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (is_integer(i)) out.push_back(i);
  return out;
}

Rational ExponentVector::evaluate(std::span<const Integer> coeffs) const {
  if (coeffs.size() != entries_.size()) {
    throw ValidationError("linear form has " + std::to_string(coeffs.size()) +
                          " coefficients, expected " + std::to_string(entries_.size()));
  }
  Rational v = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) v += Rational(coeffs[i]) * entries_[i];
  return v;
}

Rational ExponentVector::sum() const {
  Rational v = 0;
  for (const auto& b : entries_) v += b;
  return v;
}

FactorReport decomposition_factors(const Arrangement& arr, const ExponentVector& beta,
                                   const Limits& limits) {
  if (beta.size() != arr.size()) {
    throw ValidationError("beta has " + std::to_string(beta.size()) + " entries, expected " +
                          std::to_string(arr.size()));
  }
  if (!classify(arr, limits).normal_crossing) {
    throw PreconditionError("factors requires a normal crossing arrangement; run `resolve`");
  }
  FactorReport report;
  for (auto& flat : enumerate_flats(arr, limits).flats) {
    bool integral = true;
    for (auto i : flat.closure)
      if (!beta.is_integer(i)) integral = false;
    if (integral) report.supports.push_back(std::move(flat));
  }
  report.count = report.supports.size();
  return report;
}

Integer count_general_position(std::size_t n, std::size_t k) { return binomial_sum(n, k); }

Integer flat_count_general_position(std::size_t n, std::size_t m) {
  return binomial_sum(n, m);
}

}  // namespace arrdmod
