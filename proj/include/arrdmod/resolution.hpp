#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrdmod/arrangement.hpp"
#include "arrdmod/factors.hpp"

namespace arrdmod {

enum class ResolutionSource { PlaneBlowup, UserSupplied };

struct BlowupCenter {
  std::vector<Rational> point;
  IndexSet incident;  // closure of the point flat
};

/// Numerical data of a resolution: row j of `multiplicities` holds the
/// order of vanishing r_j^i of each pulled-back form alpha_i along the
/// exceptional divisor E_j.
struct ResolutionData {
  std::size_t hyperplanes = 0;  // m, the width of every row
  std::vector<BlowupCenter> centers;  // empty for user-supplied data
  std::vector<std::vector<Integer>> multiplicities;
  ResolutionSource source = ResolutionSource::PlaneBlowup;
};

/// Wraps a user-supplied multiplicity matrix for m hyperplanes. Throws
/// ValidationError on a row of the wrong width or a negative entry.
ResolutionData user_resolution(std::size_t m, std::vector<std::vector<Integer>> rows);

/// Point blow-ups resolving a line arrangement: one center per point lying
/// on three or more lines, plus any `extra_centers` (closure sets of double
/// points to blow up as well). Each line has multiplicity 1 along the
/// exceptional divisor of every center it passes through.
///
/// Throws UnsupportedDimensionError unless n = 2, and ValidationError when
/// an extra center is not the closure set of a point.
ResolutionData plane_resolution(const Arrangement& arr,
                                std::span<const IndexSet> extra_centers = {},
                                const Limits& limits = {});

/// Exponents on the strict transforms and the exceptional divisors.
struct ExtendedExponents {
  std::vector<Rational> strict;
  std::vector<Rational> exceptional;

  ExponentVector all() const;
};

/// exceptional[j] = sum_i r_j^i beta_i.
ExtendedExponents pullback_exponents(const ResolutionData& res, const ExponentVector& beta);

/// Decomposition factors of the pull-back to the blown-up plane. Divisor d
/// is the strict transform of H_d for d < m and E_{d-m} otherwise; each
/// support is the set of divisors cutting it out (empty = the surface).
struct PullbackReport {
  ExtendedExponents exponents;
  std::vector<IndexSet> supports;
  std::size_t count = 0;
};

/// Points of the blown-up surface where two divisors meet, as divisor
/// pairs: strict transforms through an unblown double point, and each
/// strict transform with the exceptional divisor of a center it contains.
std::vector<IndexSet> upstairs_points(const Arrangement& arr, const ResolutionData& res,
                                      const Limits& limits = {});

/// Counts factors upstairs: 1 + #(integer divisors) + #(points whose two
/// divisors both have integer exponents). `res` defaults to
/// plane_resolution(arr) and must come from plane_resolution of `arr`.
PullbackReport pullback_factors(const Arrangement& arr, const ExponentVector& beta,
                                const std::optional<ResolutionData>& res = std::nullopt,
                                const Limits& limits = {});

/// Integer linear forms in beta; M_alpha^beta is irreducible whenever all
/// of them take non-integer values. Sorted by coefficient sum, then
/// lexicographically descending, so unit vectors come first in index order.
struct Certificate {
  std::vector<std::vector<Integer>> forms;

  bool holds_for(const ExponentVector& beta) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Unit vectors plus the multiplicity rows of the resolution. `res` is
/// required only for non-normal-crossing arrangements with n >= 3
/// (PreconditionError otherwise); in the plane it defaults to
/// plane_resolution(arr).
Certificate certificate(const Arrangement& arr,
                        const std::optional<ResolutionData>& res = std::nullopt,
                        const Limits& limits = {});

enum class VerdictStatus { Irreducible, Reducible, Inconclusive };

enum class VerdictRule {
  IntegerExponent,      // R1: some beta_i in Z
  NormalCrossing,       // R2: normal crossing, no beta_i in Z
  ResolutionCriterion,  // R3: every certificate form non-integer
  ConcurrentLines,      // R4: concurrent plane lines with integer sum
  Undecided,            // R5
};

std::string to_string(VerdictStatus s);
// Short tag "R1".."R5".
std::string rule_tag(VerdictRule r);
// Descriptive name, e.g. "concurrent-lines".
std::string rule_name(VerdictRule r);

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  VerdictRule rule = VerdictRule::Undecided;
  std::optional<Certificate> certificate;     // IRREDUCIBLE
  std::optional<std::size_t> witness_hyperplane;  // R1
  std::optional<std::vector<Rational>> witness_point;  // R4: the common point
  std::string reason;
};

/// First matching rule wins:
///   R1 some beta_i in Z                          -> REDUCIBLE, witness H_i
///   R2 normal crossing                           -> IRREDUCIBLE, {e_i}
///   R3 all exceptional sums non-integer          -> IRREDUCIBLE, full certificate
///   R4 n = 2, lines concurrent, sum beta in Z    -> REDUCIBLE
///   R5                                           -> INCONCLUSIVE
/// R3 uses `res` when given, otherwise plane_resolution for n = 2; with
/// neither available it is skipped and the verdict stays INCONCLUSIVE.
Verdict irreducibility_verdict(const Arrangement& arr, const ExponentVector& beta,
                               const std::optional<ResolutionData>& res = std::nullopt,
                               const Limits& limits = {});

}  // namespace arrdmod
