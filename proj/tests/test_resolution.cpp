#include <doctest.h>

#include <random>
#include <set>

#include "arrdmod/error.hpp"
#include "arrdmod/resolution.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace arrdmod;
using testing::beta;
using testing::make;
using testing::q;

namespace {

using Row = std::vector<Integer>;

// beta with k integer entries whose sum is (or is not) an integer; nullopt
// when that combination cannot occur.
std::optional<ExponentVector> beta_with(std::mt19937_64& rng, std::size_t m, std::size_t k,
                                        bool integral_sum) {
  if (k == m && !integral_sum) return std::nullopt;
  if (k + 1 == m && integral_sum) return std::nullopt;
  while (true) {
    auto b = oracle::random_beta(rng, m, k);
    Rational s = 0;
    for (const auto& v : b) s += v;
    if (integral_sum && !is_integer(s)) {
      // Shift one non-integer entry so the total becomes an integer.
      auto it = std::find_if(b.begin(), b.end(), [](const Rational& v) { return !is_integer(v); });
      const Rational frac = s - Rational(mpz_class(s.get_num() / s.get_den()));
      *it -= frac;
      if (is_integer(*it)) continue;
      s -= frac;
    }
    if (is_integer(s) == integral_sum) return ExponentVector(b);
  }
}

// Plane arrangements with mixed singularities.
std::vector<Arrangement> plane_corpus() {
  std::vector<Arrangement> out = {testing::example_general(), testing::example_concurrent(),
                                  testing::example_two_triple_points(),
                                  make(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}})};
  for (std::size_t m = 3; m <= 6; ++m) out.push_back(testing::concurrent_lines(m));
  std::mt19937_64 rng(501);
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> sizes(1, 7);
    out.push_back(oracle::random_arrangement(rng, 2, sizes(rng), 1, 1));
  }
  return out;
}

}  // namespace

TEST_SUITE("resolution") {

TEST_CASE("plane_resolution of a normal crossing arrangement is empty") {
  auto res = plane_resolution(testing::example_general());
  CHECK(res.centers.empty());
  CHECK(res.multiplicities.empty());
  CHECK(res.hyperplanes == 3);
  CHECK(res.source == ResolutionSource::PlaneBlowup);
}

TEST_CASE("plane_resolution of three concurrent lines blows up the origin") {
  auto res = plane_resolution(testing::example_concurrent());
  REQUIRE(res.centers.size() == 1);
  CHECK(res.centers[0].point == std::vector<Rational>{0, 0});
  CHECK(res.centers[0].incident == IndexSet{0, 1, 2});
  CHECK(res.multiplicities == std::vector<Row>{{1, 1, 1}});
}

TEST_CASE("plane_resolution with two triple points matches the concurrence scan") {
  auto arr = testing::example_two_triple_points();
  auto res = plane_resolution(arr);
  REQUIRE(res.centers.size() == 2);
  CHECK(res.centers[0].point == std::vector<Rational>{0, 0});
  CHECK(res.centers[0].incident == IndexSet{0, 1, 2});
  CHECK(res.centers[1].point == std::vector<Rational>{0, 1});
  CHECK(res.centers[1].incident == IndexSet{0, 3, 4});
  CHECK(res.multiplicities == std::vector<Row>{{1, 1, 1, 0, 0}, {1, 0, 0, 1, 1}});

  std::map<std::vector<Rational>, IndexSet> triple;
  for (const auto& [p, through] : oracle::concurrence_scan(arr))
    if (through.size() >= 3) triple[p] = through;
  REQUIRE(triple.size() == 2);
  for (const auto& c : res.centers) CHECK(triple.at(c.point) == c.incident);
}

TEST_CASE("plane_resolution centers agree with the concurrence scan") {
  for (const auto& arr : plane_corpus()) {
    auto res = plane_resolution(arr);
    std::map<std::vector<Rational>, IndexSet> expected;
    for (const auto& [p, through] : oracle::concurrence_scan(arr))
      if (through.size() >= 3) expected[p] = through;
    std::map<std::vector<Rational>, IndexSet> got;
    for (const auto& c : res.centers) got[c.point] = c.incident;
    CHECK(got == expected);
    REQUIRE(res.multiplicities.size() == res.centers.size());
    for (std::size_t j = 0; j < res.centers.size(); ++j) {
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const bool in = std::binary_search(res.centers[j].incident.begin(),
                                           res.centers[j].incident.end(), i);
        CHECK(res.multiplicities[j][i] == (in ? 1 : 0));
      }
    }
  }
}

TEST_CASE("plane_resolution errors") {
  CHECK_THROWS_AS(plane_resolution(make(3, {{1, 0, 0, 0}})), UnsupportedDimensionError);
  const std::vector<IndexSet> bad = {{0}};
  CHECK_THROWS_AS(plane_resolution(testing::example_general(), bad), ValidationError);
  const std::vector<IndexSet> not_closed = {{0, 1}};
  CHECK_THROWS_AS(plane_resolution(testing::example_concurrent(), not_closed), ValidationError);
}

TEST_CASE("extra centers blow up requested double points") {
  const std::vector<IndexSet> origin = {{0, 1}};
  auto res = plane_resolution(testing::concurrent_lines(2), origin);
  REQUIRE(res.centers.size() == 1);
  CHECK(res.centers[0].point == std::vector<Rational>{0, 0});
  CHECK(res.multiplicities == std::vector<Row>{{1, 1}});
}

TEST_CASE("user_resolution validation") {
  CHECK_NOTHROW(user_resolution(3, {{1, 1, 1}}));
  CHECK(user_resolution(3, {{1, 1, 1}}).source == ResolutionSource::UserSupplied);
  CHECK_THROWS_AS(user_resolution(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(user_resolution(2, {{1, -1}}), ValidationError);
}

TEST_CASE("pullback_exponents examples") {
  auto e = pullback_exponents(user_resolution(3, {{1, 1, 1}}), beta({q(1, 2), q(1, 2), -1}));
  CHECK(e.exceptional == std::vector<Rational>{0});
  CHECK(e.strict == std::vector<Rational>{q(1, 2), q(1, 2), -1});

  auto none = pullback_exponents(user_resolution(2, {}), beta({q(1, 7), 3}));
  CHECK(none.exceptional.empty());
  CHECK(none.all().size() == 2);

  auto two = pullback_exponents(user_resolution(5, {{1, 1, 1, 0, 0}, {1, 0, 0, 1, 1}}),
                                beta({q(1, 2), q(1, 3), q(1, 6), 2, -2}));
  CHECK(two.exceptional == std::vector<Rational>{1, q(1, 2)});
  CHECK(two.all().size() == 7);

  CHECK_THROWS_AS(pullback_exponents(user_resolution(3, {{1, 1, 1}}), beta({1, 2})),
                  ValidationError);
}

TEST_CASE("pullback_exponents uses the multiplicities as weights") {
  auto e = pullback_exponents(user_resolution(3, {{2, 0, 3}}), beta({q(1, 4), 5, q(1, 6)}));
  CHECK(e.exceptional == std::vector<Rational>{q(1, 2) + q(1, 2)});
}

TEST_CASE("pullback_factors examples on three concurrent lines") {
  auto arr = testing::example_concurrent();
  CHECK(pullback_factors(arr, beta({q(1, 2), q(1, 2), -1})).count == 4);
  CHECK(pullback_factors(arr, beta({q(1, 2), q(1, 3), q(1, 5)})).count == 1);
  CHECK(pullback_factors(arr, beta({1, 2, 3})).count == 8);
}

TEST_CASE("pullback_factors supports are labelled upstairs divisors") {
  auto r = pullback_factors(testing::example_concurrent(), beta({q(1, 2), q(1, 2), -1}));
  // Divisors 0..2 are strict transforms, 3 is the exceptional curve.
  CHECK(r.supports == std::vector<IndexSet>{{}, {2}, {3}, {2, 3}});
  CHECK(r.exponents.exceptional == std::vector<Rational>{0});
}

TEST_CASE("pullback_factors errors") {
  auto arr = testing::example_concurrent();
  CHECK_THROWS_AS(pullback_factors(make(3, {{1, 0, 0, 0}}), beta({q(1, 2)})),
                  UnsupportedDimensionError);
  CHECK_THROWS_AS(pullback_factors(arr, beta({q(1, 2)})), ValidationError);
  CHECK_THROWS_AS(pullback_factors(arr, beta({q(1, 2), q(1, 2), q(1, 2)}),
                                   user_resolution(3, {{1, 1, 1}})),
                  PreconditionError);
  ResolutionData missing = plane_resolution(arr);
  missing.centers.clear();
  missing.multiplicities.clear();
  CHECK_THROWS_AS(pullback_factors(arr, beta({q(1, 2), q(1, 2), q(1, 2)}), missing),
                  PreconditionError);
}

TEST_CASE("concurrent lines: 2(k+1) factors when the sum is an integer, k+1 otherwise") {
  std::mt19937_64 rng(61);
  const std::vector<IndexSet> origin = {{0, 1}};
  for (std::size_t m = 2; m <= 6; ++m) {
    auto arr = testing::concurrent_lines(m);
    auto res = plane_resolution(arr, m == 2 ? std::span<const IndexSet>(origin)
                                            : std::span<const IndexSet>());
    REQUIRE(res.centers.size() == 1);
    for (std::size_t k = 0; k <= m; ++k) {
      for (bool integral : {true, false}) {
        for (int rep = 0; rep < 5; ++rep) {
          auto b = beta_with(rng, m, k, integral);
          if (!b) continue;
          const std::size_t expected = integral ? 2 * (k + 1) : k + 1;
          CHECK(pullback_factors(arr, *b, res).count == expected);
        }
      }
    }
  }
}

TEST_CASE("two concurrent lines without the extra center count like normal crossing") {
  auto arr = testing::concurrent_lines(2);
  CHECK(pullback_factors(arr, beta({q(1, 2), q(1, 2)})).count ==
        decomposition_factors(arr, beta({q(1, 2), q(1, 2)})).count);
}

TEST_CASE("normal crossing plane arrangements: pull-back equals decomposition") {
  std::mt19937_64 rng(62);
  int checked = 0;
  for (const auto& arr : plane_corpus()) {
    if (!classify(arr).normal_crossing) continue;
    for (std::size_t k = 0; k <= arr.size(); ++k) {
      const ExponentVector b(oracle::random_beta(rng, arr.size(), k));
      auto up = pullback_factors(arr, b);
      auto down = decomposition_factors(arr, b);
      CHECK(up.exponents.exceptional.empty());
      CHECK(up.count == down.count);
      std::vector<IndexSet> flats;
      for (const auto& f : down.supports) flats.push_back(f.closure);
      CHECK(std::set<IndexSet>(up.supports.begin(), up.supports.end()) ==
            std::set<IndexSet>(flats.begin(), flats.end()));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("upstairs points: every point lies on exactly two divisors") {
  for (const auto& arr : plane_corpus()) {
    auto res = plane_resolution(arr);
    auto points = upstairs_points(arr, res);
    std::set<IndexSet> seen;
    for (const auto& p : points) {
      REQUIRE(p.size() == 2);
      CHECK(p[0] < p[1]);
      CHECK(seen.insert(p).second);
      // Two exceptional curves never meet.
      CHECK(p[0] < arr.size());
    }
    // Lines through a center have pairwise distinct directions, so they
    // land on distinct points of the exceptional curve.
    for (std::size_t j = 0; j < res.centers.size(); ++j) {
      const auto& inc = res.centers[j].incident;
      for (std::size_t a = 0; a < inc.size(); ++a) {
        CHECK(seen.contains(IndexSet{inc[a], arr.size() + j}));
        for (std::size_t b = a + 1; b < inc.size(); ++b) {
          const auto &u = arr[inc[a]].normal(), &v = arr[inc[b]].normal();
          CHECK(u[0] * v[1] - u[1] * v[0] != 0);
        }
      }
    }
    // Remaining strict transform crossings are the unblown double points.
    for (const auto& [p, through] : oracle::concurrence_scan(arr)) {
      if (through.size() == 2) CHECK(seen.contains(through));
      if (through.size() >= 3) CHECK_FALSE(seen.contains(IndexSet{through[0], through[1]}));
    }
  }
}

TEST_CASE("certificate examples") {
  CHECK(certificate(testing::example_general()).forms == std::vector<Row>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(certificate(testing::example_concurrent()).forms ==
        std::vector<Row>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  CHECK(certificate(testing::example_two_triple_points()).forms ==
        std::vector<Row>{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                         {0, 0, 0, 0, 1}, {1, 1, 1, 0, 0}, {1, 0, 0, 1, 1}});
}

TEST_CASE("certificate deduplicates and handles user data") {
  auto res = user_resolution(3, {{0, 1, 0}, {1, 1, 1}, {1, 1, 1}});
  CHECK(certificate(testing::example_concurrent(), res).forms ==
        std::vector<Row>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});

  auto cone = make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}});
  CHECK_THROWS_AS(certificate(cone), PreconditionError);
  CHECK(certificate(cone, user_resolution(4, {{1, 1, 1, 1}})).forms.size() == 5);
  CHECK(certificate(make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}})).forms.size() == 2);
  CHECK_THROWS_AS(certificate(cone, user_resolution(3, {})), ValidationError);
}

TEST_CASE("verdict examples") {
  auto conc = testing::example_concurrent();

  auto a = irreducibility_verdict(conc, beta({q(1, 2), q(1, 2), q(1, 2)}));
  CHECK(a.status == VerdictStatus::Irreducible);
  CHECK(a.rule == VerdictRule::ResolutionCriterion);
  REQUIRE(a.certificate);
  CHECK(*a.certificate == certificate(conc));

  auto b = irreducibility_verdict(conc, beta({q(1, 3), q(1, 3), q(1, 3)}));
  CHECK(b.status == VerdictStatus::Reducible);
  CHECK(b.rule == VerdictRule::ConcurrentLines);
  CHECK(b.witness_point == std::vector<Rational>{0, 0});
  CHECK_FALSE(b.certificate);

  auto c = irreducibility_verdict(testing::example_general(), beta({2, q(1, 3), q(1, 5)}));
  CHECK(c.status == VerdictStatus::Reducible);
  CHECK(c.rule == VerdictRule::IntegerExponent);
  CHECK(c.witness_hyperplane == std::size_t{0});

  auto cone = make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}});
  auto d = irreducibility_verdict(cone, beta({q(1, 2), q(1, 3), q(1, 5), q(1, 7)}));
  CHECK(d.status == VerdictStatus::Inconclusive);
  CHECK(d.rule == VerdictRule::Undecided);
  CHECK_FALSE(d.reason.empty());
}

TEST_CASE("verdict labels") {
  CHECK(to_string(VerdictStatus::Irreducible) == "IRREDUCIBLE");
  CHECK(to_string(VerdictStatus::Inconclusive) == "INCONCLUSIVE");
  CHECK(rule_tag(VerdictRule::ConcurrentLines) == "R4");
  CHECK(rule_name(VerdictRule::ConcurrentLines) == "concurrent-lines");
  CHECK(rule_tag(VerdictRule::IntegerExponent) == "R1");
}

TEST_CASE("verdict with user data in three dimensions") {
  auto cone = make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}});
  auto res = user_resolution(4, {{1, 1, 1, 1}});
  auto irreducible = irreducibility_verdict(cone, beta({q(1, 3), q(1, 3), q(1, 3), q(1, 3)}), res);
  CHECK(irreducible.status == VerdictStatus::Irreducible);
  CHECK(irreducible.rule == VerdictRule::ResolutionCriterion);

  // The sum is an integer, but only the plane concurrent case decides that.
  auto open = irreducibility_verdict(cone, beta({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}), res);
  CHECK(open.status == VerdictStatus::Inconclusive);

  CHECK_THROWS_AS(irreducibility_verdict(cone, beta({q(1, 3), q(1, 3), q(1, 3), q(1, 3)}),
                                         user_resolution(3, {})),
                  ValidationError);
  CHECK_THROWS_AS(irreducibility_verdict(cone, beta({q(1, 3)})), ValidationError);
}

TEST_CASE("two triple points with an integer exceptional sum stay inconclusive") {
  auto arr = testing::example_two_triple_points();
  // beta_1 + beta_2 + beta_3 = 1.
  auto v = irreducibility_verdict(arr, beta({q(1, 2), q(1, 4), q(1, 4), q(1, 3), q(1, 3)}));
  CHECK(v.status == VerdictStatus::Inconclusive);
}

TEST_CASE("integer exponents: reducible with the first integer hyperplane as witness") {
  std::mt19937_64 rng(63);
  for (const auto& arr : plane_corpus()) {
    for (std::size_t k = 1; k <= arr.size(); ++k) {
      const auto b = oracle::random_beta(rng, arr.size(), k);
      auto v = irreducibility_verdict(arr, ExponentVector(b));
      CHECK(v.status == VerdictStatus::Reducible);
      CHECK(v.rule == VerdictRule::IntegerExponent);
      REQUIRE(v.witness_hyperplane);
      const std::size_t w = *v.witness_hyperplane;
      CHECK(is_integer(b[w]));
      for (std::size_t i = 0; i < w; ++i) CHECK_FALSE(is_integer(b[i]));
      // Near a generic point of H_w only H_w is present.
      auto local = decomposition_factors(Arrangement(arr.dim(), {arr[w]}), beta({b[w]}));
      CHECK(local.count >= 2);
    }
  }
}

TEST_CASE("normal crossing with no integer exponent is irreducible with unit forms") {
  std::mt19937_64 rng(64);
  for (const auto& arr : plane_corpus()) {
    if (!classify(arr).normal_crossing) continue;
    const ExponentVector b(oracle::random_beta(rng, arr.size(), 0));
    auto v = irreducibility_verdict(arr, b);
    CHECK(v.status == VerdictStatus::Irreducible);
    CHECK(v.rule == VerdictRule::NormalCrossing);
    REQUIRE(v.certificate);
    CHECK(v.certificate->forms.size() == arr.size());
    CHECK(v.certificate->holds_for(b));
    CHECK(decomposition_factors(arr, b).count == 1);
  }
}

TEST_CASE("verdict and certificate are coherent in the plane") {
  std::mt19937_64 rng(65);
  for (const auto& arr : plane_corpus()) {
    auto cert = certificate(arr);
    for (int rep = 0; rep < 6; ++rep) {
      const std::size_t m = arr.size();
      auto b = beta_with(rng, m, 0, rep % 2 == 0);
      if (!b) continue;
      auto v = irreducibility_verdict(arr, *b);
      CHECK((v.status == VerdictStatus::Irreducible) == cert.holds_for(*b));
      if (v.status == VerdictStatus::Irreducible) {
        REQUIRE(v.certificate);
        CHECK(v.certificate->holds_for(*b));
      }
      const auto cls = classify(arr);
      if (cls.central && cls.common_intersection.dim() == 0 && !cls.normal_crossing)
        CHECK(v.status != VerdictStatus::Inconclusive);
    }
  }
}

}  // TEST_SUITE
