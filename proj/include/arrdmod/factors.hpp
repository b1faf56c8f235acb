#pragma once

#include <cstddef>
#include <vector>

#include "arrdmod/arrangement.hpp"
#include "arrdmod/poset.hpp"

namespace arrdmod {

/// Exponents (beta_1, ..., beta_m) of the twist alpha^beta, one per hyperplane.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_integer(std::size_t i) const { return arrdmod::is_integer(entries_[i]); }
  // Indices i with beta_i in Z.
  IndexSet integer_indices() const;
  // sum_i coeffs[i] * beta_i.
  Rational evaluate(std::span<const Integer> coeffs) const;
  Rational sum() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// One decomposition factor per support flat.
struct FactorReport {
  std::vector<Flat> supports;
  std::size_t count = 0;
};

/// Supports of the decomposition factors of M_alpha^beta on a normal
/// crossing arrangement: the flats all of whose closure exponents are
/// integers, the ambient space included.
///
/// Throws ValidationError if |beta| != m and PreconditionError if the
/// arrangement is not normal crossing.
FactorReport decomposition_factors(const Arrangement& arr, const ExponentVector& beta,
                                   const Limits& limits = {});

/// sum_{j=0}^{n} C(k, j): factor count for a general position arrangement
/// with k integer exponents.
Integer count_general_position(std::size_t n, std::size_t k);

/// sum_{k=0}^{n} C(m, k): number of flats of a general position arrangement.
Integer flat_count_general_position(std::size_t n, std::size_t m);

}  // namespace arrdmod
