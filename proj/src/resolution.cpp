#include "arrdmod/resolution.hpp"

#include <algorithm>
#include <set>

#include "arrdmod/error.hpp"
#include "arrdmod/poset.hpp"

namespace arrdmod {

namespace {

void require_plane(const Arrangement& arr, const char* what) {
  if (arr.dim() != 2) {
    throw UnsupportedDimensionError(std::string(what) +
                                    " is only constructed for n = 2 (got n = " +
                                    std::to_string(arr.dim()) +
                                    "); supply resolution multiplicities instead");
  }
}

void require_beta(const Arrangement& arr, const ExponentVector& beta) {
  if (beta.size() != arr.size()) {
    throw ValidationError("beta has " + std::to_string(beta.size()) + " entries, expected " +
                          std::to_string(arr.size()));
  }
}

void require_width(const ResolutionData& res, std::size_t m) {
  if (res.hyperplanes != m) {
    throw ValidationError("resolution data is for " + std::to_string(res.hyperplanes) +
                          " hyperplanes, expected " + std::to_string(m));
  }
}

std::vector<Integer> multiplicity_row(const IndexSet& incident, std::size_t m) {
  std::vector<Integer> row(m, 0);
  for (auto i : incident) row[i] = 1;
  return row;
}

// Checks that `res` is a point blow-up of `arr` as built by plane_resolution.
void check_plane_blowup(const Arrangement& arr, const ResolutionData& res,
                        const IntersectionPoset& poset) {
  require_width(res, arr.size());
  if (res.source != ResolutionSource::PlaneBlowup) {
    throw PreconditionError("pull-back factors need plane blow-up data built from the arrangement");
  }
  std::set<IndexSet> centers;
  for (const auto& c : res.centers) {
    auto idx = poset.find(c.incident);
    if (!idx || poset.flats[*idx].codim != 2) {
      throw ValidationError("blow-up center " + format_index_set(c.incident) +
                            " is not a point of the arrangement");
    }
    centers.insert(c.incident);
  }
  for (const auto& f : poset.flats) {
    if (f.codim == 2 && f.closure.size() >= 3 && !centers.contains(f.closure)) {
      throw PreconditionError("point " + format_index_set(f.closure) +
                              " lies on three or more lines but is not blown up");
    }
  }
}

}  // namespace

ResolutionData user_resolution(std::size_t m, std::vector<std::vector<Integer>> rows) {
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != m) {
      throw ValidationError("multiplicity row " + std::to_string(j + 1) + " has " +
                            std::to_string(rows[j].size()) + " entries, expected " +
                            std::to_string(m));
    }
    for (const auto& r : rows[j]) {
      if (r < 0) {
        throw ValidationError("multiplicity row " + std::to_string(j + 1) +
                              " has a negative entry");
      }
    }
  }
  ResolutionData res;
  res.hyperplanes = m;
  res.multiplicities = std::move(rows);
  res.source = ResolutionSource::UserSupplied;
  return res;
}

ResolutionData plane_resolution(const Arrangement& arr, std::span<const IndexSet> extra_centers,
                                const Limits& limits) {
  require_plane(arr, "plane resolution");
  const auto poset = enumerate_flats(arr, limits);

  std::set<IndexSet> wanted;
  for (const auto& c : extra_centers) {
    auto idx = poset.find(c);
    if (!idx || poset.flats[*idx].codim != 2) {
      throw ValidationError("requested center " + format_index_set(c) +
                            " is not the closure set of a point");
    }
    wanted.insert(c);
  }

  ResolutionData res;
  res.hyperplanes = arr.size();
  res.source = ResolutionSource::PlaneBlowup;
  for (const auto& f : poset.flats) {
    if (f.codim != 2) continue;
    if (f.closure.size() < 3 && !wanted.contains(f.closure)) continue;
    res.centers.push_back({f.subspace.base_point(), f.closure});
    res.multiplicities.push_back(multiplicity_row(f.closure, arr.size()));
  }
  return res;
}

ExponentVector ExtendedExponents::all() const {
  std::vector<Rational> v(strict);
  v.insert(v.end(), exceptional.begin(), exceptional.end());
  return ExponentVector(std::move(v));
}

ExtendedExponents pullback_exponents(const ResolutionData& res, const ExponentVector& beta) {
  require_width(res, beta.size());
  ExtendedExponents out;
  out.strict = beta.entries();
  for (const auto& row : res.multiplicities) {
    if (row.size() != beta.size()) {
      throw ValidationError("multiplicity row width does not match beta");
    }
    out.exceptional.push_back(beta.evaluate(row));
  }
  return out;
}

std::vector<IndexSet> upstairs_points(const Arrangement& arr, const ResolutionData& res,
                                      const Limits& limits) {
  require_plane(arr, "upstairs incidence");
  const auto poset = enumerate_flats(arr, limits);
  check_plane_blowup(arr, res, poset);
  const std::size_t m = arr.size();

  std::vector<IndexSet> points;
  for (const auto& f : poset.flats) {
    if (f.codim != 2) continue;
    auto center = std::find_if(res.centers.begin(), res.centers.end(),
                               [&](const BlowupCenter& c) { return c.incident == f.closure; });
    if (center == res.centers.end()) {
      points.push_back(f.closure);
    } else {
      const std::size_t e = m + static_cast<std::size_t>(center - res.centers.begin());
      for (auto i : f.closure) points.push_back({i, e});
    }
  }
  return points;
}

PullbackReport pullback_factors(const Arrangement& arr, const ExponentVector& beta,
                                const std::optional<ResolutionData>& res,
                                const Limits& limits) {
  require_plane(arr, "pull-back factors");
  require_beta(arr, beta);
  const ResolutionData data = res ? *res : plane_resolution(arr, {}, limits);

  PullbackReport report;
  report.exponents = pullback_exponents(data, beta);
  const ExponentVector upstairs = report.exponents.all();

  report.supports.push_back({});
  for (std::size_t d = 0; d < upstairs.size(); ++d)
    if (upstairs.is_integer(d)) report.supports.push_back({d});
  for (const auto& p : upstairs_points(arr, data, limits)) {
    if (std::all_of(p.begin(), p.end(), [&](std::size_t d) { return upstairs.is_integer(d); }))
      report.supports.push_back(p);
  }
  report.count = report.supports.size();
  return report;
}

bool Certificate::holds_for(const ExponentVector& beta) const {
  return std::none_of(forms.begin(), forms.end(),
                      [&](const auto& f) { return is_integer(beta.evaluate(f)); });
}

namespace {

Certificate build_certificate(std::size_t m, const std::vector<std::vector<Integer>>& rows) {
  std::vector<std::vector<Integer>> forms;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Integer> e(m, 0);
    e[i] = 1;
    forms.push_back(std::move(e));
  }
  forms.insert(forms.end(), rows.begin(), rows.end());

  auto sum = [](const std::vector<Integer>& f) {
    Integer s = 0;
    for (const auto& v : f) s += v;
    return s;
  };
  std::sort(forms.begin(), forms.end(), [&](const auto& a, const auto& b) {
    const Integer sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return b < a;
  });
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return Certificate{std::move(forms)};
}

}  // namespace

Certificate certificate(const Arrangement& arr, const std::optional<ResolutionData>& res,
                        const Limits& limits) {
  if (res) {
    require_width(*res, arr.size());
    return build_certificate(arr.size(), res->multiplicities);
  }
  if (arr.dim() == 2) {
    return build_certificate(arr.size(), plane_resolution(arr, {}, limits).multiplicities);
  }
  if (!classify(arr, limits).normal_crossing) {
    throw PreconditionError(
        "certificate requires resolution multiplicities for a non-normal-crossing "
        "arrangement with n = " + std::to_string(arr.dim()));
  }
  return build_certificate(arr.size(), {});
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Irreducible: return "IRREDUCIBLE";
    case VerdictStatus::Reducible: return "REDUCIBLE";
    case VerdictStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "";
}

std::string rule_tag(VerdictRule r) {
  switch (r) {
    case VerdictRule::IntegerExponent: return "R1";
    case VerdictRule::NormalCrossing: return "R2";
    case VerdictRule::ResolutionCriterion: return "R3";
    case VerdictRule::ConcurrentLines: return "R4";
    case VerdictRule::Undecided: return "R5";
  }
  return "";
}

std::string rule_name(VerdictRule r) {
  switch (r) {
    case VerdictRule::IntegerExponent: return "integer-exponent";
    case VerdictRule::NormalCrossing: return "normal-crossing";
    case VerdictRule::ResolutionCriterion: return "resolution-criterion";
    case VerdictRule::ConcurrentLines: return "concurrent-lines";
    case VerdictRule::Undecided: return "undecided";
  }
  return "";
}

Verdict irreducibility_verdict(const Arrangement& arr, const ExponentVector& beta,
                               const std::optional<ResolutionData>& res, const Limits& limits) {
  require_beta(arr, beta);
  if (res) require_width(*res, arr.size());

  Verdict v;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta.is_integer(i)) {
      v.status = VerdictStatus::Reducible;
      v.rule = VerdictRule::IntegerExponent;
      v.witness_hyperplane = i;
      v.reason = "beta_" + std::to_string(i + 1) + " = " + to_string(beta[i]) +
                 " is an integer; near a generic point of H_" + std::to_string(i + 1) +
                 " there is a factor supported on it";
      return v;
    }
  }

  const auto cls = classify(arr, limits);
  if (cls.normal_crossing) {
    v.status = VerdictStatus::Irreducible;
    v.rule = VerdictRule::NormalCrossing;
    v.certificate = build_certificate(arr.size(), {});
    v.reason = "normal crossing arrangement with no integer exponent";
    return v;
  }

  std::optional<ResolutionData> data = res;
  if (!data && arr.dim() == 2) data = plane_resolution(arr, {}, limits);

  std::string failed_form;
  if (data) {
    auto cert = build_certificate(arr.size(), data->multiplicities);
    if (cert.holds_for(beta)) {
      v.status = VerdictStatus::Irreducible;
      v.rule = VerdictRule::ResolutionCriterion;
      v.certificate = std::move(cert);
      v.reason = "no exponent and no exceptional sum is an integer";
      return v;
    }
    for (const auto& row : data->multiplicities) {
      const Rational value = beta.evaluate(row);
      if (is_integer(value)) {
        failed_form = "exceptional sum " + to_string(value) + " is an integer";
        break;
      }
    }
  }

  if (arr.dim() == 2 && cls.central && cls.common_intersection.dim() == 0 &&
      is_integer(beta.sum())) {
    v.status = VerdictStatus::Reducible;
    v.rule = VerdictRule::ConcurrentLines;
    v.witness_point = cls.common_intersection.base_point();
    v.reason = "all lines pass through one point and sum(beta) = " + to_string(beta.sum()) +
               " is an integer";
    return v;
  }

  v.status = VerdictStatus::Inconclusive;
  v.rule = VerdictRule::Undecided;
  if (!data) {
    v.reason = "arrangement is not normal crossing and no resolution multiplicities were "
               "supplied for n = " + std::to_string(arr.dim());
  } else {
    v.reason = failed_form + "; the resolution criterion is only sufficient here";
  }
  return v;
}

}  // namespace arrdmod
