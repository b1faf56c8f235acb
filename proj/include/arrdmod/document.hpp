#pragma once

// JSON input format:
//
//   {
//     "dim": 2,
//     "hyperplanes": [ {"coeffs": ["1", "0"], "constant": "0"}, ... ],
//     "beta": ["1/2", "-1", ...],                       (optional)
//     "resolution": {"multiplicities": [["1", "1", "1"]]}  (optional)
//   }
//
// Rationals are strings "p" or "p/q"; JSON integers are accepted too, JSON
// floats never.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrdmod/arrangement.hpp"
#include "arrdmod/factors.hpp"
#include "arrdmod/resolution.hpp"

namespace arrdmod {

struct HyperplaneSpec {
  std::vector<Rational> coeffs;
  Rational constant;

  friend bool operator==(const HyperplaneSpec&, const HyperplaneSpec&) = default;
};

struct InputDocument {
  std::size_t dim = 0;
  std::vector<HyperplaneSpec> hyperplanes;
  std::optional<std::vector<Rational>> beta;
  std::optional<std::vector<std::vector<Integer>>> multiplicities;

  Arrangement arrangement() const;
  std::optional<ExponentVector> exponents() const;
  std::optional<ResolutionData> resolution() const;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws ValidationError naming the offending field.
InputDocument parse_input(std::string_view json_text);

/// Canonical JSON text; parse_input(render_input(d)) == d.
std::string render_input(const InputDocument& doc);

}  // namespace arrdmod
