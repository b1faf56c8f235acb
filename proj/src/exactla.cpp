#include "arrdmod/exactla.hpp"

#include <cassert>
#include <regex>
#include <utility>

#include "arrdmod/error.hpp"

namespace arrdmod {

namespace {

Integer parse_integer(std::string digits) {
  if (digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text, std::string_view field) {
  static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([+-]?[0-9]+))?\s*$)");
  std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw ValidationError("malformed rational in " + std::string(field) + ": \"" + s +
                          "\" (expected \"p\" or \"p/q\")");
  }
  Integer num = parse_integer(match[1].str());
  Integer den(1);
  if (match[2].matched) {
    den = parse_integer(match[2].str());
    if (den == 0) {
      throw ValidationError("zero denominator in " + std::string(field) + ": \"" + s + "\"");
    }
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw ValidationError("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RrefResult rref(Matrix m) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(lead, pivot);

    const Rational inv = 1 / Rational(m(lead, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

AffineSubspace AffineSubspace::ambient(std::size_t n) {
  return AffineSubspace(n, false, Matrix(0, n + 1));
}

AffineSubspace AffineSubspace::empty(std::size_t n) {
  return AffineSubspace(n, true, Matrix(0, n + 1));
}

int AffineSubspace::dim() const {
  if (empty_) return -1;
  return static_cast<int>(n_ - system_.rows());
}

namespace {

// Reduces `row` (length n+1) against a canonical system in place.
void reduce_against(const Matrix& system, std::vector<Rational>& row) {
  for (std::size_t r = 0; r < system.rows(); ++r) {
    std::size_t p = 0;
    while (system(r, p) == 0) ++p;
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    for (std::size_t c = p; c < system.cols(); ++c) row[c] -= factor * system(r, c);
  }
}

std::vector<Rational> augmented_row(const AffineEquation& eq) {
  std::vector<Rational> row(eq.normal.begin(), eq.normal.end());
  row.push_back(-eq.constant);
  return row;
}

}  // namespace

bool AffineSubspace::lies_in(const AffineEquation& eq) const {
  if (eq.normal.size() != n_) throw ValidationError("equation dimension mismatch");
  if (empty_) return true;
  auto row = augmented_row(eq);
  reduce_against(system_, row);
  for (const auto& v : row)
    if (v != 0) return false;
  return true;
}

bool AffineSubspace::contains(const AffineSubspace& other) const {
  if (other.n_ != n_) throw ValidationError("subspace dimension mismatch");
  if (other.empty_) return true;
  if (empty_) return false;
  for (const auto& eq : equations())
    if (!other.lies_in(eq)) return false;
  return true;
}

std::vector<Rational> AffineSubspace::base_point() const {
  assert(!empty_);
  std::vector<Rational> point(n_);
  for (std::size_t r = 0; r < system_.rows(); ++r) {
    std::size_t p = 0;
    while (system_(r, p) == 0) ++p;
    point[p] = system_(r, n_);
  }
  return point;
}

AffineSubspace AffineSubspace::meet(std::span<const AffineEquation> eqs) const {
  if (empty_) {
    for (const auto& eq : eqs)
      if (eq.normal.size() != n_) throw ValidationError("equation dimension mismatch");
    return *this;
  }
  auto all = equations();
  all.insert(all.end(), eqs.begin(), eqs.end());
  return intersect(n_, all);
}

std::vector<AffineEquation> AffineSubspace::equations() const {
  std::vector<AffineEquation> out;
  for (std::size_t r = 0; r < system_.rows(); ++r) {
    AffineEquation eq;
    eq.normal.assign(system_.row(r).begin(), system_.row(r).end() - 1);
    eq.constant = -system_(r, n_);
    out.push_back(std::move(eq));
  }
  return out;
}

AffineSubspace intersect(std::size_t n, std::span<const AffineEquation> eqs) {
  Matrix aug(0, n + 1);
  for (const auto& eq : eqs) {
    if (eq.normal.size() != n) {
      throw ValidationError("equation has " + std::to_string(eq.normal.size()) +
                            " coefficients, expected " + std::to_string(n));
    }
    aug.append_row(augmented_row(eq));
  }
  auto [reduced, rank, pivots] = rref(std::move(aug));
  // A pivot in the constant column means 0 = 1.
  if (!pivots.empty() && pivots.back() == n) return AffineSubspace::empty(n);

  Matrix system(0, n + 1);
  for (std::size_t r = 0; r < rank; ++r) system.append_row(reduced.row(r));
  return AffineSubspace(n, false, std::move(system));
}

}  // namespace arrdmod
