#pragma once

// Exact rational scalars and affine linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arrdmod {

using Rational = mpq_class;
using Integer = mpz_class;

// Sorted, duplicate-free list of 0-based hyperplane indices.
using IndexSet = std::vector<std::size_t>;

/// Parses "p" or "p/q" (optional signs, q != 0) into lowest terms.
/// Throws ValidationError naming `field` on anything else.
Rational parse_rational(std::string_view text, std::string_view field = "value");

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
RrefResult rref(Matrix m);

/// One affine equation normal . x + constant = 0.
struct AffineEquation {
  std::vector<Rational> normal;
  Rational constant;

  friend bool operator==(const AffineEquation&, const AffineEquation&) = default;
};

/// An affine subspace of Q^n (read as a subspace of C^n), stored as the
/// unique RREF of an augmented system [A | b] with solution set {A x = b}.
/// Two nonempty subspaces are equal as point sets iff their systems are
/// identical, so operator== is set equality.
class AffineSubspace {
 public:
  static AffineSubspace ambient(std::size_t n);
  static AffineSubspace empty(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  bool is_empty() const { return empty_; }
  // -1 for the empty set.
  int dim() const;
  std::size_t codim() const { return n_ - static_cast<std::size_t>(dim()); }

  // Rows of [A | b]; only meaningful when nonempty. No zero rows.
  const Matrix& system() const { return system_; }

  /// True iff every point of this (nonempty) subspace satisfies `eq`.
  bool lies_in(const AffineEquation& eq) const;

  /// True iff `other` is a subset of this subspace.
  bool contains(const AffineSubspace& other) const;

  /// Point with every free coordinate set to zero.
  std::vector<Rational> base_point() const;

  /// Intersection with additional equations.
  AffineSubspace meet(std::span<const AffineEquation> eqs) const;

  /// Equivalent equations (one per row of the canonical system).
  std::vector<AffineEquation> equations() const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  AffineSubspace(std::size_t n, bool empty, Matrix system)
      : n_(n), empty_(empty), system_(std::move(system)) {}

  friend AffineSubspace intersect(std::size_t n, std::span<const AffineEquation> eqs);

  std::size_t n_ = 0;
  bool empty_ = false;
  Matrix system_;
};

/// Solution set of {normal_j . x + constant_j = 0}. The empty list gives
/// the ambient space. Throws ValidationError on a normal of length != n.
AffineSubspace intersect(std::size_t n, std::span<const AffineEquation> eqs);

}  // namespace arrdmod
