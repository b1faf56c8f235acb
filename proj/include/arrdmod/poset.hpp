#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrdmod/arrangement.hpp"

namespace arrdmod {

/// A nonempty intersection of hyperplanes, identified by its closure set
/// (every index whose hyperplane contains it).
struct Flat {
  IndexSet closure;
  AffineSubspace subspace;
  std::size_t codim = 0;
};

/// Flats ordered by reverse inclusion. `flats` is sorted by
/// (codim, closure) with the ambient space first; `covers` lists
/// (lower, upper) flat indices of the Hasse diagram, sorted.
struct IntersectionPoset {
  std::size_t dim = 0;
  std::vector<Flat> flats;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::optional<std::size_t> find(const IndexSet& closure) const;
};

/// All j with H_j containing the intersection of {H_i : i in subset}.
/// Throws PreconditionError if that intersection is empty.
IndexSet closure(const Arrangement& arr, const IndexSet& subset);

/// Worklist enumeration of every flat, including the ambient space.
/// Throws ResourceError when m exceeds limits.enumerate_max.
IntersectionPoset enumerate_flats(const Arrangement& arr, const Limits& limits = {});

/// Graphviz digraph of the Hasse diagram. Nodes are labelled with 1-based
/// closure sets; edges run from each flat to the flats covering it.
std::string hasse_dot(const IntersectionPoset& poset);

/// 1-based "{1,2}" rendering used in reports and DOT labels.
std::string format_index_set(const IndexSet& s);

namespace detail {
// Unbounded worklist enumeration shared by classify and enumerate_flats.
std::vector<Flat> enumerate_flats_unbounded(const Arrangement& arr);
}  // namespace detail

}  // namespace arrdmod
