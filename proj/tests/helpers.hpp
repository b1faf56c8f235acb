#pragma once

#include <string>
#include <vector>

#include "arrdmod/arrangement.hpp"
#include "arrdmod/factors.hpp"

namespace testing {

using arrdmod::Rational;

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Each row is (a_1, ..., a_n, c) for a . x + c = 0.
inline arrdmod::Arrangement make(std::size_t n, const std::vector<std::vector<Rational>>& rows) {
  std::vector<arrdmod::Hyperplane> hs;
  for (const auto& r : rows) {
    std::vector<Rational> normal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    hs.emplace_back(normal, r[n]);
  }
  return arrdmod::Arrangement(n, hs);
}

inline arrdmod::ExponentVector beta(std::vector<Rational> v) {
  return arrdmod::ExponentVector(std::move(v));
}

// {x, y, x+y+1}
inline arrdmod::Arrangement example_general() {
  return make(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
}

// {x, y, x+y}
inline arrdmod::Arrangement example_concurrent() {
  return make(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
}

// {x, y, x+y, y-1, x+y-1}
inline arrdmod::Arrangement example_two_triple_points() {
  return make(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 1, -1}, {1, 1, -1}});
}

// m concurrent lines through the origin: x, y, x + c y for c = 1, 2, ...
inline arrdmod::Arrangement concurrent_lines(std::size_t m) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0) rows.push_back({1, 0, 0});
    else if (i == 1) rows.push_back({0, 1, 0});
    else rows.push_back({1, Rational(static_cast<long>(i - 1)), 0});
  }
  return make(2, rows);
}

}  // namespace testing
