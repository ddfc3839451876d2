#include "qalg/pbw.hpp"
#include "qalg/torus.hpp"

#include <doctest.h>

#include <random>

using namespace qalg;

namespace {

struct Letter {
  int index;
  int sign;
};

// X^u X^v by bubbling single letters into order, one lambda per swap.
Scalar reorder_coefficient(const CommutationMatrix& M, const TorusExponent& u, const TorusExponent& v) {
  std::vector<Letter> w;
  for (const auto* e : {&u, &v})
    for (int i = 0; i < M.m; ++i)
      for (int k = 0; k < std::abs((*e)[i]); ++k) w.push_back({i, (*e)[i] > 0 ? 1 : -1});
  Scalar c = Scalar::one(M.nvars());
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t].index > w[t + 1].index) {
        // X_a^s X_b^t = lambda_ab^(st) X_b^t X_a^s
        c *= M(w[t].index, w[t + 1].index).pow(w[t].sign * w[t + 1].sign);
        std::swap(w[t], w[t + 1]);
      }
  return c;
}

CommutationMatrix random_torus(std::mt19937_64& rng, int m) {
  std::vector<std::string> names;
  for (int i = 0; i < 3; ++i) names.push_back("t" + std::to_string(i));
  ParameterLattice lat(names);
  CommutationMatrix M = trivial_commutation(m, lat);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Exponents x{e(rng), e(rng), e(rng)};
      M.entries[i][j] = Scalar::monomial(x);
      M.entries[j][i] = M.entries[i][j].inverse();
    }
  return M;
}

TorusExponent random_exponent(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> e(-2, 2);
  TorusExponent u(m);
  for (auto& x : u) x = e(rng);
  return u;
}

TorusExponent add(const TorusExponent& a, const TorusExponent& b) {
  TorusExponent s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

}  // namespace

TEST_CASE("rank two torus products") {
  ParameterLattice lat({"q"});
  CommutationMatrix M = trivial_commutation(2, lat);
  const Scalar q = Scalar::variable(1, 0);
  M.entries[0][1] = q;
  M.entries[1][0] = q.inverse();
  REQUIRE(M.is_antisymmetric());
  const auto X1 = TorusElement::generator(2, 1, 0), X2 = TorusElement::generator(2, 1, 1);
  CHECK(t_mul(M, X1, X2) == TorusElement::monomial({1, 1}, Scalar::one(1)));
  CHECK(t_mul(M, X2, X1) == TorusElement::monomial({1, 1}, q.inverse()));
  CHECK(t_mul(M, TorusElement::generator(2, 1, 0, -1), X1) == TorusElement::one(2, 1));
  CHECK(bicharacter(M, {1, 0}, {0, 1}) == q);
  CHECK(bicharacter(M, {2, 0}, {0, 3}) == q.pow(6));
  // (X1 + X2)^2 = X1^2 + (1 + q^-1) X1 X2 + X2^2
  const auto s = X1 + X2;
  TorusElement expect = TorusElement::monomial({2, 0}, Scalar::one(1));
  expect.add_term({1, 1}, Scalar::one(1) + q.inverse());
  expect.add_term({0, 2}, Scalar::one(1));
  CHECK(t_mul(M, s, s) == expect);
  CHECK_FALSE(trivial_commutation(3, lat) == M);
}

TEST_CASE("cocycle matches letter-by-letter reordering") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    const int m = 2 + t % 3;
    const auto M = random_torus(rng, m);
    const auto u = random_exponent(rng, m), v = random_exponent(rng, m), w = random_exponent(rng, m);
    CHECK(cocycle(M, u, v) == reorder_coefficient(M, u, v));
    // associativity of the twisted product
    CHECK(cocycle(M, u, v) * cocycle(M, add(u, v), w) == cocycle(M, v, w) * cocycle(M, u, add(v, w)));
    // bicharacter is bimultiplicative and alternating
    CHECK(bicharacter(M, add(u, v), w) == bicharacter(M, u, w) * bicharacter(M, v, w));
    CHECK(bicharacter(M, u, u) == Scalar::one(M.nvars()));
    const auto a = TorusElement::monomial(u, Scalar::one(M.nvars()));
    const auto b = TorusElement::monomial(v, Scalar::one(M.nvars()));
    const auto c = TorusElement::monomial(w, Scalar::one(M.nvars()));
    CHECK(t_mul(M, t_mul(M, a, b), c) == t_mul(M, a, t_mul(M, b, c)));
  }
}

TEST_CASE("C_2 commutation matrix") {
  const auto s = build_spec(2, Kind::generic);
  const auto M = cn_matrix(s);
  const Scalar one = Scalar::one(s.nvars());
  CHECK(M.is_antisymmetric());
  const std::vector<std::vector<Scalar>> expect{
      {one, one, s.qi(1), s.pi(2)},
      {one, one, s.qi(1), s.qi(2)},
      {s.qi(1).inverse(), s.qi(1).inverse(), one, s.g(1, 2)},
      {s.pi(2).inverse(), s.qi(2).inverse(), s.g(1, 2).inverse(), one},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(M(i, j) == expect[i][j]);
}

TEST_CASE("torus matrices agree with products in the algebra") {
  for (Kind kind : {Kind::generic, Kind::symplectic, Kind::heisenberg}) {
    for (int n = 1; n <= 3; ++n) {
      const auto s = build_spec(n, kind);
      PbwAlgebra A(s);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const auto choice = LocalizationChoice::from_mask(n, mask);
        const auto M = sn_matrix(s, choice);
        CHECK(M.is_antisymmetric());
        std::vector<PBWElement> basis;
        for (int i = 1; i <= n; ++i) basis.push_back(A.z(i));
        for (int i = 1; i <= n; ++i) basis.push_back(choice.use_x[i - 1] ? A.x(i) : A.y(i));
        for (int a = 0; a < 2 * n; ++a)
          for (int b = 0; b < 2 * n; ++b)
            CHECK(A.multiply(basis[a], basis[b]) == M(a, b) * A.multiply(basis[b], basis[a]));
      }
      CHECK(sn_matrix(s, LocalizationChoice::all_y(n)) == cn_matrix(s));
    }
  }
}

TEST_CASE("theta respects the C_n relations") {
  for (Kind kind : {Kind::generic, Kind::euclidean, Kind::graded_weyl}) {
    for (int n = 1; n <= 3; ++n) {
      const auto s = build_spec(n, kind);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const auto r = theta_check(s, LocalizationChoice::from_mask(n, mask));
        CHECK(!r.checks.empty());
        CHECK(r.passed());
      }
    }
  }
  CHECK(LocalizationChoice::from_mask(2, 1).to_string() == "x1 y2");
}

TEST_CASE("commutation matrix JSON round trip") {
  const auto s = build_spec(3, Kind::generic);
  const auto M = sn_matrix(s, LocalizationChoice::all_x(3));
  CHECK(commutation_from_json(to_json(M), s.lattice) == M);
  const auto W = quantum_weyl_cn_matrix(build_spec(2, Kind::graded_weyl));
  CHECK(W.is_antisymmetric());
}
