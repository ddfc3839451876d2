#include "qalg/pbw.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace qalg;

namespace {

PBWMonomial mono(int n, std::initializer_list<std::pair<int, int>> gens) {
  PBWMonomial m(2 * n, 0);
  for (auto [g, e] : gens) m[g] += e;
  return m;
}

// Number of exponent tuples in N^d with total degree <= m, by direct enumeration.
std::size_t count_tuples(int d, int m) {
  if (d == 0) return 1;
  std::size_t total = 0;
  for (int a = 0; a <= m; ++a) total += count_tuples(d - 1, m - a);
  return total;
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(parse_word("x2 y1 x1", 2) == Word{gen_x(2), gen_y(1), gen_x(1)});
  CHECK(parse_word("1", 2).empty());
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("y1^3", 1) == Word{gen_y(1), gen_y(1), gen_y(1)});
  CHECK_THROWS(parse_word("x3", 2));
  CHECK_THROWS(parse_word("z1", 2));
  CHECK(format_word(parse_word("y1 x2", 2)) == "y1 x2");
}

TEST_CASE("normal forms of small words") {
  const auto s = build_spec(2, Kind::generic);
  const std::size_t k = s.nvars();
  CHECK(normal_form(s, parse_word("x1 y1", 2)) ==
        PBWElement::monomial(2, mono(2, {{gen_y(1), 1}, {gen_x(1), 1}}), s.qi(1)));
  PBWElement expect = PBWElement::monomial(2, mono(2, {{gen_y(2), 1}, {gen_x(2), 1}}), s.qi(2));
  expect += casimir(s, 1);
  CHECK(normal_form(s, parse_word("x2 y2", 2)) == expect);
  CHECK(normal_form(s, parse_word("y1 x1", 2)) ==
        PBWElement::monomial(2, mono(2, {{gen_y(1), 1}, {gen_x(1), 1}}), Scalar::one(k)));
  CHECK(normal_form(s, {}) == PBWElement::one(2, k));
}

TEST_CASE("ordered words are fixed points and degree never grows") {
  const auto s = build_spec(2, Kind::generic);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 5), letter(0, 3);
  for (int t = 0; t < 100; ++t) {
    Word w(len(rng));
    for (auto& g : w) g = letter(rng);
    const PBWElement f = normal_form(s, w);
    for (const auto& [m, c] : f.terms()) CHECK(degree(m) <= static_cast<int>(w.size()));
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    PBWMonomial m(4, 0);
    for (int g : sorted) ++m[g];
    CHECK(normal_form(s, sorted) == PBWElement::monomial(2, m, Scalar::one(s.nvars())));
  }
}

TEST_CASE("engine and rewriting agree; unit law") {
  for (Kind kind : {Kind::generic, Kind::symplectic, Kind::euclidean}) {
    const auto s = build_spec(2, kind);
    PbwAlgebra A(s);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 5), letter(0, 3);
    for (int t = 0; t < 60; ++t) {
      Word w(len(rng));
      for (auto& g : w) g = letter(rng);
      const PBWElement f = A.word(w);
      CHECK(f == normal_form(s, w));
      CHECK(A.multiply(f, A.one()) == f);
      CHECK(A.multiply(A.one(), f) == f);
    }
  }
}

TEST_CASE("associativity on random triples") {
  const auto s = build_spec(2, Kind::generic);
  const FuzzResult r = associativity_fuzz(s, 200, 4, 424242);
  CHECK(r.trials == 200);
  CHECK(r.failures == 0);
}

TEST_CASE("Casimir elements commute") {
  for (int n = 1; n <= 3; ++n) {
    const auto s = build_spec(n, Kind::generic);
    PbwAlgebra A(s);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(A.multiply(A.z(i), A.z(j)) == A.multiply(A.z(j), A.z(i)));
  }
}

TEST_CASE("relation suites") {
  CHECK(verify_relations(build_spec(1, Kind::generic)).checks.size() == 1);
  for (Kind kind : {Kind::generic, Kind::symplectic, Kind::euclidean, Kind::heisenberg, Kind::graded_weyl}) {
    for (int n = 1; n <= 3; ++n) {
      const auto s = build_spec(n, kind);
      const auto rel = verify_relations(s);
      CHECK(rel.checks.size() == static_cast<std::size_t>(n * (2 * n - 1)));
      CHECK(rel.passed());
      for (int i = 1; i <= n; ++i) CHECK(verify_normality(s, i).passed());
      for (int m = 1; m < n; ++m) CHECK(verify_ambiskew(s, m).passed());
    }
  }
  // specialized at a rational q
  const auto sp = build_spec(2, Kind::symplectic, Rational(3)).specialized();
  CHECK(verify_relations(sp).passed());
  CHECK(verify_normality(sp, 2).passed());
}

TEST_CASE("a wrong coefficient is caught") {
  auto s = build_spec(2, Kind::generic);
  PbwAlgebra A(s);
  // z1 x2 = p2^-1 x2 z1, not q2^-1
  CHECK_FALSE(A.multiply(A.z(1), A.x(2)) == s.qi(2).inverse() * A.multiply(A.x(2), A.z(1)));
}

TEST_CASE("skew power formulae") {
  const auto s = build_spec(2, Kind::generic);
  CHECK(skew_coefficient(s, 2, 2) == s.qi(2) + s.pi(2));
  CHECK(skew_coefficient(s, 2, 1) == Scalar::one(s.nvars()));
  CHECK(skew_power_identity(s, 1, 3, SkewForm::k1_base).passed());
  CHECK(skew_power_identity(s, 2, 1, SkewForm::xk_y).passed());
  CHECK_THROWS_AS(skew_power_identity(s, 1, 2, SkewForm::xk_y), std::invalid_argument);
  CHECK_THROWS_AS(skew_power_identity(s, 2, 2, SkewForm::k1_base), std::invalid_argument);
  CHECK_THROWS_AS(skew_power_identity(s, 2, 0, SkewForm::x_yk), std::invalid_argument);
  CHECK(parse_skew_form("x_yk") == SkewForm::x_yk);
  CHECK_THROWS(parse_skew_form("other"));
}

TEST_CASE("growth counts match monomial enumeration") {
  for (int n = 1; n <= 2; ++n) {
    const int N = n == 1 ? 8 : 6;
    const auto g = growth_count(build_spec(n, Kind::generic), N);
    REQUIRE(g.counts.size() == static_cast<std::size_t>(N + 1));
    for (int m = 0; m <= N; ++m) CHECK(g.counts[m] == count_tuples(2 * n, m));
    REQUIRE(g.exponent.has_value());
    CHECK(std::abs(*g.exponent - 2 * n) < 0.5);
  }
  CHECK(growth_count(build_spec(1, Kind::generic), 0).counts == std::vector<std::size_t>{1});
  CHECK(growth_count(build_spec(2, Kind::generic), 3).counts[3] == 35);
}

TEST_CASE("growth budget") {
  GrowthBudget tight;
  tight.max_words = 100;
  CHECK_THROWS_AS(growth_count(build_spec(2, Kind::generic), 6, tight), BudgetExceeded);
}

TEST_CASE("exponent fit on exact power counts") {
  // counts = (m + 3/2)^4 exactly recovers 4 with g = 2
  std::vector<std::size_t> counts;
  for (int m = 0; m <= 6; ++m) counts.push_back(static_cast<std::size_t>(std::pow(2 * m + 3, 4)));
  CHECK(fit_growth_exponent(counts, 2, 4, 6) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK_THROWS(fit_growth_exponent(counts, 2, 6, 6));
}

TEST_CASE("skew power formulae hold for small powers") {
  for (int n = 1; n <= 3; ++n) {
    const auto s = build_spec(n, Kind::generic);
    for (int k = 1; k <= 6; ++k) {
      CHECK(skew_power_identity(s, 1, k, SkewForm::k1_base).passed());
      for (int i = 2; i <= n; ++i) {
        CHECK(skew_power_identity(s, i, k, SkewForm::xk_y).passed());
        CHECK(skew_power_identity(s, i, k, SkewForm::x_yk).passed());
      }
    }
  }
}
