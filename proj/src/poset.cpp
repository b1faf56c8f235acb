#include "arrdmod/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "arrdmod/error.hpp"

namespace arrdmod {

namespace {

IndexSet closure_of(const Arrangement& arr, const AffineSubspace& subspace) {
  IndexSet out;
  for (std::size_t j = 0; j < arr.size(); ++j)
    if (subspace.lies_in(arr[j].equation())) out.push_back(j);
  return out;
}

bool flat_less(const Flat& a, const Flat& b) {
  if (a.codim != b.codim) return a.codim < b.codim;
  return a.closure < b.closure;
}

}  // namespace

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

std::optional<std::size_t> IntersectionPoset::find(const IndexSet& closure) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i].closure == closure) return i;
  return std::nullopt;
}

IndexSet closure(const Arrangement& arr, const IndexSet& subset) {
  const auto subspace = intersect(arr.dim(), arr.equations(subset));
  if (subspace.is_empty()) {
    throw PreconditionError("hyperplanes " + format_index_set(subset) +
                            " have empty intersection");
  }
  return closure_of(arr, subspace);
}

namespace detail {

std::vector<Flat> enumerate_flats_unbounded(const Arrangement& arr) {
  const std::size_t n = arr.dim();
  std::map<IndexSet, Flat> found;
  std::deque<IndexSet> work;

  auto ambient = AffineSubspace::ambient(n);
  found.emplace(IndexSet{}, Flat{{}, ambient, 0});
  work.push_back({});

  while (!work.empty()) {
    const IndexSet key = std::move(work.front());
    work.pop_front();
    const AffineSubspace base = found.at(key).subspace;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (std::binary_search(key.begin(), key.end(), i)) continue;
      const AffineEquation eq[] = {arr[i].equation()};
      auto next = base.meet(eq);
      if (next.is_empty()) continue;
      auto cl = closure_of(arr, next);
      if (found.contains(cl)) continue;
      const std::size_t codim = next.codim();
      found.emplace(cl, Flat{cl, std::move(next), codim});
      work.push_back(std::move(cl));
    }
  }

  std::vector<Flat> flats;
  flats.reserve(found.size());
  for (auto& [key, flat] : found) flats.push_back(std::move(flat));
  std::sort(flats.begin(), flats.end(), flat_less);
  return flats;
}

}  // namespace detail

IntersectionPoset enumerate_flats(const Arrangement& arr, const Limits& limits) {
  if (arr.size() > limits.enumerate_max) {
    throw ResourceError("flat enumeration supports at most " +
                        std::to_string(limits.enumerate_max) + " hyperplanes, got " +
                        std::to_string(arr.size()));
  }
  IntersectionPoset poset;
  poset.dim = arr.dim();
  poset.flats = detail::enumerate_flats_unbounded(arr);

  // Every cover raises codimension by exactly one, so only adjacent levels
  // need testing. G lies inside F iff closure(F) is a subset of closure(G).
  const auto& flats = poset.flats;
  for (std::size_t lo = 0; lo < flats.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < flats.size(); ++hi) {
      if (flats[hi].codim <= flats[lo].codim) continue;
      if (flats[hi].codim > flats[lo].codim + 1) break;
      if (std::includes(flats[hi].closure.begin(), flats[hi].closure.end(),
                        flats[lo].closure.begin(), flats[lo].closure.end())) {
        poset.covers.emplace_back(lo, hi);
      }
    }
  }
  return poset;
}

std::string hasse_dot(const IntersectionPoset& poset) {
  std::ostringstream out;
  out << "digraph intersection_poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.flats.size(); ++i) {
    out << "  f" << i << " [label=\"" << format_index_set(poset.flats[i].closure) << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) out << "  f" << lo << " -> f" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace arrdmod
