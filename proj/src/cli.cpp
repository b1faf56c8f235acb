#include "arrdmod/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "arrdmod/document.hpp"
#include "arrdmod/error.hpp"
#include "arrdmod/poset.hpp"

namespace arrdmod::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string command;
  InputDocument doc;
  Arrangement arr;
  Limits limits;
};

struct Output {
  json data;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("error while writing " + path);
}

json one_based(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

json rationals(std::span<const Rational> values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(to_string(v));
  return a;
}

json integers(std::span<const Integer> values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

json natural(const Integer& v) {
  if (v.fits_ulong_p()) return v.get_ui();
  return v.get_str();
}

std::string tuple(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

std::string tuple(std::span<const Integer> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const ExponentVector& require_beta(const Context& ctx, std::optional<ExponentVector>& holder) {
  holder = ctx.doc.exponents();
  if (!holder) throw PreconditionError(ctx.command + " requires \"beta\" in the input");
  return *holder;
}

json header(const Context& ctx) {
  json j;
  j["command"] = ctx.command;
  j["dim"] = ctx.arr.dim();
  json hs = json::array();
  for (const auto& h : ctx.arr.hyperplanes()) hs.push_back(to_string(h));
  j["hyperplanes"] = hs;
  if (ctx.doc.beta) j["beta"] = rationals(*ctx.doc.beta);
  return j;
}

std::string text_header(const Context& ctx) {
  std::ostringstream out;
  out << ctx.command << ": arrangement of " << ctx.arr.size() << " hyperplane"
      << (ctx.arr.size() == 1 ? "" : "s") << " in C^" << ctx.arr.dim() << "\n";
  for (std::size_t i = 0; i < ctx.arr.size(); ++i)
    out << "  H" << i + 1 << ": " << to_string(ctx.arr[i]) << "\n";
  if (ctx.doc.beta) out << "beta: " << tuple(*ctx.doc.beta) << "\n";
  return out.str();
}

json flat_json(const Flat& f) {
  json j;
  j["closure"] = one_based(f.closure);
  j["dim"] = f.subspace.dim();
  j["codim"] = f.codim;
  j["point"] = rationals(f.subspace.base_point());
  return j;
}

Output run_classify(const Context& ctx) {
  const auto c = classify(ctx.arr, ctx.limits);
  Output o;
  o.data["general_position"] = c.general_position;
  o.data["normal_crossing"] = c.normal_crossing;
  o.data["central"] = c.central;
  json common;
  common["empty"] = c.common_intersection.is_empty();
  common["dim"] = c.common_intersection.dim();
  if (!c.common_intersection.is_empty())
    common["point"] = rationals(c.common_intersection.base_point());
  o.data["common_intersection"] = common;

  std::ostringstream t;
  t << "general position: " << yes_no(c.general_position) << "\n"
    << "normal crossing:  " << yes_no(c.normal_crossing) << "\n"
    << "central:          " << yes_no(c.central) << "\n";
  if (c.central) {
    t << "common intersection: dim " << c.common_intersection.dim() << " through "
      << tuple(c.common_intersection.base_point()) << "\n";
  } else {
    t << "common intersection: empty\n";
  }
  o.text = t.str();
  return o;
}

Output run_flats(const Context& ctx, const std::string& dot_path) {
  const auto poset = enumerate_flats(ctx.arr, ctx.limits);
  if (!dot_path.empty()) write_file(dot_path, hasse_dot(poset));

  Output o;
  json flats = json::array();
  for (const auto& f : poset.flats) flats.push_back(flat_json(f));
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers) covers.push_back({lo, hi});
  o.data["flat_count"] = poset.flats.size();
  o.data["flats"] = flats;
  o.data["covers"] = covers;

  std::ostringstream t;
  t << poset.flats.size() << " flats\n";
  for (std::size_t i = 0; i < poset.flats.size(); ++i) {
    const auto& f = poset.flats[i];
    t << "  [" << i << "] " << format_index_set(f.closure) << "  dim " << f.subspace.dim()
      << "  through " << tuple(f.subspace.base_point()) << "\n";
  }
  t << poset.covers.size() << " cover relations\n";
  for (const auto& [lo, hi] : poset.covers) t << "  [" << lo << "] < [" << hi << "]\n";
  o.text = t.str();
  return o;
}

Output run_factors(const Context& ctx) {
  std::optional<ExponentVector> holder;
  const auto& beta = require_beta(ctx, holder);
  const auto report = decomposition_factors(ctx.arr, beta, ctx.limits);

  Output o;
  json supports = json::array();
  for (const auto& f : report.supports) supports.push_back(flat_json(f));
  o.data["count"] = report.count;
  o.data["supports"] = supports;

  std::ostringstream t;
  t << "decomposition factors: " << report.count << "\n";
  for (const auto& f : report.supports)
    t << "  support " << format_index_set(f.closure) << "  dim " << f.subspace.dim() << "\n";
  o.text = t.str();
  return o;
}

Output run_count(const Context& ctx) {
  if (!classify(ctx.arr, ctx.limits).general_position) {
    throw PreconditionError("count requires a general position arrangement; run `factors`");
  }
  const std::size_t n = ctx.arr.dim();
  const std::size_t m = ctx.arr.size();
  Output o;
  std::ostringstream t;
  const Integer flats = flat_count_general_position(n, m);
  o.data["n"] = n;
  o.data["m"] = m;
  o.data["flat_count"] = natural(flats);
  t << "flats: " << flats.get_str() << "\n";
  if (auto beta = ctx.doc.exponents()) {
    const std::size_t k = beta->integer_indices().size();
    const Integer factors = count_general_position(n, k);
    o.data["k"] = k;
    o.data["factor_count"] = natural(factors);
    t << "integer exponents: " << k << "\n"
      << "decomposition factors: " << factors.get_str() << "\n";
  }
  o.text = t.str();
  return o;
}

json resolution_json(const ResolutionData& res) {
  json j;
  j["source"] = res.source == ResolutionSource::PlaneBlowup ? "PLANE_BLOWUP" : "USER_SUPPLIED";
  json centers = json::array();
  for (const auto& c : res.centers)
    centers.push_back({{"point", rationals(c.point)}, {"incident", one_based(c.incident)}});
  j["centers"] = centers;
  json rows = json::array();
  for (const auto& r : res.multiplicities) rows.push_back(integers(r));
  j["multiplicities"] = rows;
  return j;
}

std::string resolution_text(const ResolutionData& res) {
  std::ostringstream t;
  t << "source: "
    << (res.source == ResolutionSource::PlaneBlowup ? "PLANE_BLOWUP" : "USER_SUPPLIED") << "\n";
  t << "exceptional divisors: " << res.multiplicities.size() << "\n";
  for (std::size_t j = 0; j < res.multiplicities.size(); ++j) {
    t << "  E" << j + 1 << ": r = " << tuple(res.multiplicities[j]);
    if (j < res.centers.size()) {
      t << "  center " << tuple(res.centers[j].point) << " on "
        << format_index_set(res.centers[j].incident);
    }
    t << "\n";
  }
  return t.str();
}

std::optional<ResolutionData> resolution_for(const Context& ctx) {
  if (ctx.arr.dim() == 2) return plane_resolution(ctx.arr, {}, ctx.limits);
  if (auto res = ctx.doc.resolution()) return res;
  if (classify(ctx.arr, ctx.limits).normal_crossing) {
    ResolutionData none;
    none.hyperplanes = ctx.arr.size();
    return none;
  }
  return std::nullopt;
}

Output run_resolve(const Context& ctx) {
  auto res = resolution_for(ctx);
  if (!res) {
    throw UnsupportedDimensionError(
        "resolve only constructs resolutions for n = 2; supply \"resolution\" "
        "multiplicities for n = " + std::to_string(ctx.arr.dim()));
  }
  Output o;
  o.data["resolution"] = resolution_json(*res);
  o.text = resolution_text(*res);
  return o;
}

std::string divisor_label(std::size_t d, std::size_t m) {
  return d < m ? "H" + std::to_string(d + 1) : "E" + std::to_string(d - m + 1);
}

Output run_pullback(const Context& ctx) {
  std::optional<ExponentVector> holder;
  const auto& beta = require_beta(ctx, holder);
  const auto res = plane_resolution(ctx.arr, {}, ctx.limits);
  const auto report = pullback_factors(ctx.arr, beta, res, ctx.limits);
  const std::size_t m = ctx.arr.size();

  Output o;
  o.data["resolution"] = resolution_json(res);
  o.data["exponents"] = {{"strict", rationals(report.exponents.strict)},
                         {"exceptional", rationals(report.exponents.exceptional)}};
  json supports = json::array();
  for (const auto& s : report.supports) {
    json labels = json::array();
    for (auto d : s) labels.push_back(divisor_label(d, m));
    supports.push_back(labels);
  }
  o.data["count"] = report.count;
  o.data["supports"] = supports;

  std::ostringstream t;
  t << resolution_text(res);
  t << "exceptional exponents: " << tuple(report.exponents.exceptional) << "\n";
  t << "pull-back decomposition factors: " << report.count << "\n";
  for (const auto& s : report.supports) {
    t << "  support ";
    if (s.empty()) t << "surface";
    for (std::size_t i = 0; i < s.size(); ++i) t << (i ? " & " : "") << divisor_label(s[i], m);
    t << "\n";
  }
  o.text = t.str();
  return o;
}

json certificate_json(const Certificate& c) {
  json forms = json::array();
  for (const auto& f : c.forms) forms.push_back(integers(f));
  return forms;
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream t;
  for (const auto& f : c.forms) t << "  " << tuple(f) << "\n";
  return t.str();
}

Output run_verdict(const Context& ctx) {
  std::optional<ExponentVector> holder;
  const auto& beta = require_beta(ctx, holder);
  const auto v = irreducibility_verdict(ctx.arr, beta, ctx.doc.resolution(), ctx.limits);

  Output o;
  o.data["status"] = to_string(v.status);
  o.data["rule"] = rule_tag(v.rule);
  o.data["rule_name"] = rule_name(v.rule);
  json witness = nullptr;
  if (v.witness_hyperplane) witness = {{"hyperplane", *v.witness_hyperplane + 1}};
  if (v.witness_point) witness = {{"point", rationals(*v.witness_point)}};
  o.data["witness"] = witness;
  o.data["certificate"] = v.certificate ? certificate_json(*v.certificate) : json(nullptr);
  o.data["reason"] = v.reason;

  std::ostringstream t;
  t << "verdict: " << to_string(v.status) << " (" << rule_tag(v.rule) << " "
    << rule_name(v.rule) << ")\n";
  if (v.witness_hyperplane) t << "witness: H" << *v.witness_hyperplane + 1 << "\n";
  if (v.witness_point) t << "witness: point " << tuple(*v.witness_point) << "\n";
  t << "reason: " << v.reason << "\n";
  if (v.certificate) t << "certificate forms:\n" << certificate_text(*v.certificate);
  o.text = t.str();
  return o;
}

Output run_certificate(const Context& ctx) {
  const auto c = certificate(ctx.arr, ctx.doc.resolution(), ctx.limits);
  Output o;
  o.data["forms"] = certificate_json(c);
  o.text = "certificate forms:\n" + certificate_text(c);
  return o;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"classify", "flats",    "factors", "count",
                                                 "resolve",  "pullback", "verdict", "certificate"};
  return names;
}

std::optional<std::size_t> env_limit() {
  const char* raw = std::getenv("ARRDMOD_LIMIT");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0') throw ValidationError("ARRDMOD_LIMIT must be a natural number");
  return static_cast<std::size_t>(v);
}

}  // namespace

ExecResult execute(const std::vector<std::string>& args) {
  ExecResult result;
  std::ostringstream out, err;

  CLI::App app{"Combinatorial invariants of twisted D-modules on hyperplane arrangements",
               "arrdmod"};
  std::string command, input, format = "text", dot;
  std::optional<std::size_t> limit;
  app.add_option("command", command, "one of: classify flats factors count resolve pullback "
                                     "verdict certificate")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--input", input, "input JSON document")->required();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dot", dot, "write the Hasse diagram as DOT (flats only)");
  app.add_option("--limit", limit, "maximum number of hyperplanes to enumerate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!dot.empty() && command != "flats") {
      throw CLI::ValidationError("--dot", "--dot is only valid with the flats command");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? 0 : 2;
    if (result.exit_code != 0) err << app.help();
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    Limits limits;
    if (!limit) limit = env_limit();
    if (limit) limits.classify_max = limits.enumerate_max = *limit;

    auto doc = parse_input(read_file(input));
    auto arr = doc.arrangement();
    Context ctx{command, std::move(doc), std::move(arr), limits};

    Output o;
    if (command == "classify") o = run_classify(ctx);
    else if (command == "flats") o = run_flats(ctx, dot);
    else if (command == "factors") o = run_factors(ctx);
    else if (command == "count") o = run_count(ctx);
    else if (command == "resolve") o = run_resolve(ctx);
    else if (command == "pullback") o = run_pullback(ctx);
    else if (command == "verdict") o = run_verdict(ctx);
    else o = run_certificate(ctx);

    if (format == "json") {
      json doc_out = header(ctx);
      for (auto& [key, value] : o.data.items()) doc_out[key] = value;
      out << doc_out.dump(2) << "\n";
    } else {
      out << text_header(ctx) << o.text;
    }
    result.exit_code = 0;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }
  result.out = result.exit_code == 0 ? out.str() : std::string();
  result.err = err.str();
  return result;
}

}  // namespace arrdmod::cli
