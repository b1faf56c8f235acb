#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrdmod/exactla.hpp"

namespace arrdmod {

/// Affine hyperplane H = {a . x + c = 0}, kept in canonical form: integer
/// coefficients with gcd 1 and a positive first nonzero normal entry.
/// Any nonzero rational multiple of (a, c) canonicalizes to the same value.
class Hyperplane {
 public:
  /// Throws ValidationError if the normal is zero.
  Hyperplane(std::vector<Rational> normal, Rational constant);

  const AffineEquation& equation() const { return eq_; }
  const std::vector<Rational>& normal() const { return eq_.normal; }
  const Rational& constant() const { return eq_.constant; }
  std::size_t dim() const { return eq_.normal.size(); }

  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  AffineEquation eq_;
};

/// Human-readable form such as "x + y + 1" (x, y, z up to n = 3, x1..xn after).
std::string to_string(const Hyperplane& h);

struct Limits {
  // Largest m accepted by classify (subset enumeration up to size n+1).
  std::size_t classify_max = 20;
  // Largest m accepted by enumerate_flats and everything built on it.
  std::size_t enumerate_max = 16;
};

/// Ordered list of distinct hyperplanes in Q^n.
class Arrangement {
 public:
  /// Throws ValidationError on dimension mismatch or repeated hyperplanes.
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  std::vector<AffineEquation> equations() const;
  std::vector<AffineEquation> equations(const IndexSet& subset) const;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

struct Classification {
  bool general_position = false;
  bool normal_crossing = false;
  bool central = false;
  AffineSubspace common_intersection = AffineSubspace::ambient(0);
};

/// General position, normal crossing and centrality of `arr`.
///
/// General position: every subset of at most n normals is independent and
/// every n+1 hyperplanes have empty intersection. Normal crossing: for every
/// flat, the normals of the hyperplanes containing it are independent.
/// Throws ResourceError when m exceeds limits.classify_max.
Classification classify(const Arrangement& arr, const Limits& limits = {});

/// Base point and pivot coordinates describing the complement V2 used by
/// essentialize. V2 = base_point + span{e_j : j in pivot_coordinates}.
struct EssentialSplit {
  std::vector<Rational> base_point;
  std::vector<std::size_t> pivot_coordinates;
  bool identity = true;
};

struct Essentialization {
  Arrangement reduced;
  EssentialSplit split;
};

/// Restricts the arrangement to a complement of its common intersection V1
/// when V1 has positive dimension; otherwise returns it unchanged.
Essentialization essentialize(const Arrangement& arr);

}  // namespace arrdmod
