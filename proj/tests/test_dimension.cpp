#include "qalg/dimension.hpp"

#include <doctest.h>

#include <random>

using namespace qalg;

namespace {

// Rank by Gaussian elimination over Q.
int rational_rank(const I64Matrix& A) {
  std::vector<std::vector<Rational>> M(A.rows(), std::vector<Rational>(A.cols()));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) M[i][j] = A(i, j);
  int r = 0;
  for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    Eigen::Index p = r;
    while (p < A.rows() && M[p][c] == 0) ++p;
    if (p == A.rows()) continue;
    std::swap(M[p], M[r]);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Rational f = M[i][c] / M[r][c];
      for (Eigen::Index j = c; j < A.cols(); ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

I64Matrix random_alternating(std::mt19937_64& rng, int m, int range) {
  std::uniform_int_distribution<int> e(-range, range);
  I64Matrix S = I64Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      S(i, j) = e(rng);
      S(j, i) = -S(i, j);
    }
  return S;
}

long long form(const I64Matrix& S, const I64Vector& u, const I64Vector& v) {
  long long s = 0;
  for (Eigen::Index i = 0; i < S.rows(); ++i)
    for (Eigen::Index j = 0; j < S.cols(); ++j) s += u(i) * S(i, j) * v(j);
  return s;
}

// Largest pairwise-orthogonal independent family among vectors in [-1, 1]^m.
int brute_isotropic(const I64Matrix& S) {
  const int m = static_cast<int>(S.rows());
  std::vector<I64Vector> all;
  int total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (int code = 1; code < total; ++code) {
    I64Vector v(m);
    int c = code;
    for (int i = 0; i < m; ++i, c /= 3) v(i) = c % 3 - 1;
    all.push_back(v);
  }
  int best = 0;
  std::vector<I64Vector> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t t = from; t < all.size(); ++t) {
      bool ok = true;
      for (const auto& w : chosen) ok = ok && form(S, w, all[t]) == 0;
      if (!ok) continue;
      I64Matrix rows(chosen.size() + 1, m);
      for (std::size_t a = 0; a < chosen.size(); ++a) rows.row(a) = chosen[a].transpose();
      rows.row(chosen.size()) = all[t].transpose();
      if (rational_rank(rows) != static_cast<int>(chosen.size()) + 1) continue;
      chosen.push_back(all[t]);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

I64Vector vec(std::initializer_list<long long> xs) {
  I64Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = x;
  return v;
}

AlgebraSpec custom(int n, std::vector<std::string> symbols, std::vector<std::string> q, std::vector<std::string> p) {
  CustomParameters c;
  c.symbols = std::move(symbols);
  c.q = std::move(q);
  c.p = std::move(p);
  return build_custom_spec(n, c);
}

}  // namespace

TEST_CASE("integer rank") {
  I64Matrix A(3, 3);
  A << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(integer_rank(A) == 2);
  CHECK(integer_rank(I64Matrix(I64Matrix::Zero(2, 5))) == 0);
  CHECK(integer_rank(I64Matrix(I64Matrix::Identity(4, 4))) == 4);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-5, 5);
  for (int t = 0; t < 100; ++t) {
    // planted rank <= 2: (6x2)(2x7)
    I64Matrix B(6, 2), C(2, 7);
    for (int i = 0; i < B.size(); ++i) B.data()[i] = e(rng);
    for (int i = 0; i < C.size(); ++i) C.data()[i] = e(rng);
    const I64Matrix P = mat_mul(B, C);
    CHECK(integer_rank(P) == rational_rank(P));
    CHECK(integer_rank(P) <= 2);
    I64Matrix R(5, 4);
    for (int i = 0; i < R.size(); ++i) R.data()[i] = e(rng);
    CHECK(integer_rank(R) == rational_rank(R));
    CHECK(integer_rank(cast_matrix<boost::multiprecision::cpp_int>(R)) == rational_rank(R));
  }
}

TEST_CASE("Smith invariants") {
  I64Matrix A(2, 2);
  A << 2, 4, 6, 8;
  CHECK(smith_invariants(A) == std::vector<long long>{2, 4});
  I64Matrix B(3, 3);
  B << 2, 0, 0, 0, 3, 0, 0, 0, 0;
  CHECK(smith_invariants(B) == std::vector<long long>{1, 6});
}

TEST_CASE("null space basis") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int t = 0; t < 50; ++t) {
    I64Matrix A(3, 6);
    for (int i = 0; i < A.size(); ++i) A.data()[i] = e(rng);
    const I64Matrix N = nullspace_basis(A);
    CHECK(N.cols() == 6 - rational_rank(A));
    CHECK(mat_mul(A, N).isZero());
    if (N.cols() > 0) CHECK(rational_rank(N) == N.cols());
  }
}

TEST_CASE("single-parameter isotropic rank") {
  I64Matrix J(2, 2);
  J << 0, 1, -1, 0;
  CHECK(max_isotropic_rank_single(J).rank == 1);
  CHECK(max_isotropic_rank_single(I64Matrix(I64Matrix::Zero(3, 3))).rank == 3);
  I64Matrix bad(2, 2);
  bad << 0, 1, 1, 0;
  CHECK_THROWS_AS(max_isotropic_rank_single(bad), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const int m = 2 + t % 3;
    const I64Matrix S = random_alternating(rng, m, 2);
    const int r = rational_rank(S);
    CHECK(r % 2 == 0);
    const auto res = max_isotropic_rank_single(S);
    CHECK(res.rank == m - r / 2);
    REQUIRE(res.witness.size() == res.rank);
    for (const auto& u : res.witness.vectors)
      for (const auto& v : res.witness.vectors) CHECK(form(S, u, v) == 0);
    if (res.rank > 0) {
      I64Matrix rows(res.rank, m);
      for (int a = 0; a < res.rank; ++a) rows.row(a) = res.witness.vectors[a].transpose();
      CHECK(rational_rank(rows) == res.rank);
    }
    CHECK(brute_isotropic(S) <= res.rank);
  }
}

TEST_CASE("exponent pairings") {
  const auto p1 = build_spec(1, Kind::generic_p1);
  const auto E = pairing_from_matrix(cn_matrix(p1));
  const auto q1 = *p1.lattice.index_of("q1");
  CHECK(E.components[q1](0, 1) == 1);
  CHECK(E.components[q1](1, 0) == -1);

  const auto sp = pairing_from_matrix(cn_matrix(build_spec(1, Kind::symplectic)));
  REQUIRE(sp.k == 1);
  CHECK(sp.components[0](0, 1) == -2);

  const auto Z = zero_pairing(4, 2);
  I64Vector u(4), v(4);
  u << 1, 2, 3, 4;
  v << -1, 0, 5, 2;
  CHECK(Z.orthogonal(u, v));
  CHECK(Z.pair(u, v) == std::vector<long long>{0, 0});

  auto scaled = custom(1, {"a"}, {"2*a"}, {"1"});
  CHECK_THROWS_AS(pairing_from_matrix(cn_matrix(scaled)), std::invalid_argument);
}

TEST_CASE("witness search") {
  const auto E = pairing_from_matrix(cn_matrix(build_spec(2, Kind::generic)));
  CHECK(isotropic_upper_bound(E) == 2);
  const auto w = isotropic_witness_search(E, 2, 2);
  REQUIRE(w.has_value());
  CHECK(verify_witness(E, *w));
  CHECK_FALSE(isotropic_witness_search(E, 3, 2).has_value());
  // more height never loses witnesses
  int last = 0;
  for (int h = 1; h <= 3; ++h) {
    SearchOptions o;
    o.height = h;
    const int size = best_isotropic_witness(E, o).size();
    CHECK(size >= last);
    last = size;
  }
  Witness dependent{{vec({1, 0, 0, 0}), vec({2, 0, 0, 0})}};
  CHECK_FALSE(verify_witness(E, dependent));
}

TEST_CASE("dimension of C_n for the presets") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(dim_cn(build_spec(n, Kind::generic_p1)).d() == n);
    CHECK(dim_cn(build_spec(n, Kind::generic_q1)).d() == n + 1);
    CHECK(dim_cn(build_spec(n, Kind::symplectic)).d() == n);
    CHECK(dim_cn(build_spec(n, Kind::euclidean)).d() == n + 1);
    CHECK(dim_cn(build_spec(n, Kind::heisenberg)).d() == n + 1);
    CHECK(dim_cn(build_spec(n, Kind::graded_weyl)).d() == n);
    const auto g = dim_cn(build_spec(n, Kind::generic));
    CHECK(g.method == DimensionMethod::search);
    CHECK(g.is_point());
    CHECK(g.d() == n);
  }
  const auto r = dim_cn(build_spec(3, Kind::generic_p1));
  CHECK(r.method == DimensionMethod::theorem_p1);
  CHECK(r.search_confirmed == std::optional<bool>(true));
  CHECK(dim_cn(build_spec(2, Kind::symplectic, Rational(5))).d() == 2);
}

TEST_CASE("dimension of custom algebras") {
  // all p = 1 falls under the p = 1 rule
  const auto a = custom(2, {"a", "b"}, {"a", "b"}, {"1", "1"});
  const auto ra = dim_cn(a);
  CHECK(ra.method == DimensionMethod::theorem_p1);
  CHECK(ra.d() == 2);
  // one symbol: exact
  const auto b = custom(2, {"t"}, {"t", "t^2"}, {"t^-1", "t^3"});
  CHECK(dim_cn(b).method == DimensionMethod::exact_single_parameter);
  const auto S = pairing_from_matrix(cn_matrix(b)).components[0];
  CHECK(dim_cn(b).d() == 4 - rational_rank(S) / 2);
}

TEST_CASE("quantized Weyl comparison") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = build_spec(n, Kind::graded_weyl);
    CHECK(quantum_weyl_cn_matrix(s) == cn_matrix(s));
  }
}

TEST_CASE("holonomic bound") {
  auto check = [](const AlgebraSpec& s, int g, int d, int b) {
    const auto r = bernstein_bound(s);
    CHECK(r.gkdim_algebra == g);
    CHECK(r.d == d);
    CHECK(r.bound == b);
  };
  check(build_spec(3, Kind::generic_p1), 6, 3, 3);
  check(build_spec(3, Kind::generic_q1), 6, 4, 2);
  check(build_spec(1, Kind::generic), 2, 1, 1);
  const auto j = to_json(bernstein_bound(build_spec(2, Kind::symplectic)));
  CHECK(j["bound"] == 2);
}

TEST_CASE("indeterminate reports") {
  DimensionReport r;
  r.lo = 2;
  r.hi = 3;
  CHECK_FALSE(r.is_point());
  CHECK_THROWS_AS(r.d(), IndeterminateBound);
  CHECK(to_json(r)["d"] == nlohmann::json::array({2, 3}));
}
