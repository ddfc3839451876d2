#include "qalg/dimension.hpp"

#include "qalg/pbw.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace qalg {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

BigMatrix to_big(const I64Matrix& A) { return cast_matrix<cpp_int>(A); }

BigMatrix stack_rows(const std::vector<I64Vector>& vs, int m) {
  BigMatrix A(static_cast<Eigen::Index>(vs.size()), m);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (int j = 0; j < m; ++j) A(static_cast<Eigen::Index>(r), j) = vs[r](j);
  return A;
}

bool is_alternating(const I64Matrix& S) {
  if (S.rows() != S.cols()) return false;
  for (Eigen::Index i = 0; i < S.rows(); ++i) {
    if (S(i, i) != 0) return false;
    for (Eigen::Index j = i + 1; j < S.cols(); ++j)
      if (S(i, j) != -S(j, i)) return false;
  }
  return true;
}

I64Vector basis_vector(int m, int i) {
  I64Vector v = I64Vector::Zero(m);
  v(i) = 1;
  return v;
}

// Forms that vanish on every isotropic sublattice: the components and some
// fixed integer combinations of them (a generic combination attains the
// largest rank in the pencil).
std::vector<BigMatrix> bounding_forms(const ExponentPairing& E) {
  std::vector<BigMatrix> forms;
  for (const auto& c : E.components) forms.push_back(to_big(c));
  if (E.k > 1) {
    const std::vector<std::function<long long(int)>> weights = {
        [](int) { return 1LL; },
        [](int c) { return static_cast<long long>(c + 1); },
        [](int c) { return static_cast<long long>((c + 1) * (c + 1)); },
        [](int c) { return (c % 2 ? -1LL : 1LL) * (c + 2); },
        [](int c) { return static_cast<long long>(1) << std::min(c, 40); },
    };
    for (const auto& w : weights) {
      BigMatrix F = BigMatrix::Zero(E.m, E.m);
      for (int c = 0; c < E.k; ++c) {
        const long long wc = w(c);
        const I64Matrix& Ec = E.components[c];
        for (int i = 0; i < E.m; ++i)
          for (int j = 0; j < E.m; ++j)
            if (Ec(i, j) != 0) F(i, j) += cpp_int(wc) * Ec(i, j);
      }
      forms.push_back(std::move(F));
    }
  }
  return forms;
}

// Bound on the rank of an isotropic lattice containing the chosen vectors:
// it sits inside their common orthogonal complement V, and inside V each
// form F allows at most dim V - rank(F|V)/2.
int restricted_bound(const ExponentPairing& E, const std::vector<BigMatrix>& forms,
                     const std::vector<I64Vector>& chosen) {
  BigMatrix B;
  if (chosen.empty()) {
    B = BigMatrix::Identity(E.m, E.m);
  } else {
    BigMatrix A(static_cast<Eigen::Index>(chosen.size()) * E.k, E.m);
    Eigen::Index r = 0;
    for (const auto& u : chosen) {
      for (int c = 0; c < E.k; ++c) {
        const I64Vector row = E.components[c].transpose() * u;
        for (int j = 0; j < E.m; ++j) A(r, j) = row(j);
        ++r;
      }
    }
    B = nullspace_basis(A);
  }
  const int t = static_cast<int>(B.cols());
  int best = t;
  for (const auto& F : forms) {
    if (t == 0) break;
    const BigMatrix Bt = B.transpose();
    BigMatrix work = mat_mul(mat_mul(Bt, F), B);
    best = std::min(best, t - bareiss_echelon(work) / 2);
  }
  return best;
}

bool independent_with(const std::vector<I64Vector>& chosen, const I64Vector& v, int m) {
  std::vector<I64Vector> all = chosen;
  all.push_back(v);
  BigMatrix A = stack_rows(all, m);
  return bareiss_echelon(A) == static_cast<int>(all.size());
}

struct Candidates {
  std::vector<I64Vector> vectors;
};

Candidates enumerate_candidates(int m, int height, std::size_t max_candidates) {
  const double total = std::pow(2.0 * height + 1, m);
  if (total / 2 > static_cast<double>(max_candidates)) {
    throw BudgetExceeded("isotropic search at height " + std::to_string(height) + " in rank " + std::to_string(m) +
                         " exceeds the candidate budget");
  }
  Candidates out;
  std::vector<long long> v(m, -height);
  for (;;) {
    // canonical sign: first nonzero entry positive; primitive
    int first = 0;
    while (first < m && v[first] == 0) ++first;
    if (first < m && v[first] > 0) {
      long long g = 0;
      for (auto x : v) g = std::gcd(g, std::llabs(x));
      if (g == 1) {
        I64Vector e(m);
        for (int i = 0; i < m; ++i) e(i) = v[i];
        out.vectors.push_back(std::move(e));
      }
    }
    int pos = m - 1;
    while (pos >= 0 && v[pos] == height) v[pos--] = -height;
    if (pos < 0) break;
    ++v[pos];
  }
  auto key = [](const I64Vector& e) {
    return std::make_pair(e.cwiseAbs().maxCoeff(), e.cwiseAbs().sum());
  };
  std::stable_sort(out.vectors.begin(), out.vectors.end(), [&](const I64Vector& a, const I64Vector& b) {
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
  });
  return out;
}

class Search {
 public:
  Search(const ExponentPairing& E, const Candidates& cands, int target, const SearchOptions& options)
      : E_(E), cands_(cands), target_(target), options_(options), forms_(bounding_forms(E)) {}

  void run() {
    std::vector<std::size_t> all(cands_.vectors.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<I64Vector> chosen;
    dfs(chosen, all);
  }

  const std::vector<I64Vector>& best() const { return best_; }
  bool found() const { return static_cast<int>(best_.size()) >= target_; }

 private:
  bool dfs(std::vector<I64Vector>& chosen, const std::vector<std::size_t>& remaining) {
    if (++nodes_ > options_.node_limit) return true;
    if (chosen.size() > best_.size()) best_ = chosen;
    if (static_cast<int>(chosen.size()) >= target_) return true;
    if (static_cast<int>(chosen.size() + remaining.size()) < target_) return false;
    if (restricted_bound(E_, forms_, chosen) < target_) return false;

    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      const I64Vector& v = cands_.vectors[remaining[pos]];
      if (!independent_with(chosen, v, E_.m)) continue;
      std::vector<std::size_t> next;
      for (std::size_t q = pos + 1; q < remaining.size(); ++q) {
        if (E_.orthogonal(v, cands_.vectors[remaining[q]])) next.push_back(remaining[q]);
      }
      chosen.push_back(v);
      const bool stop = dfs(chosen, next);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const ExponentPairing& E_;
  const Candidates& cands_;
  int target_;
  SearchOptions options_;
  std::vector<BigMatrix> forms_;
  std::vector<I64Vector> best_;
  std::size_t nodes_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<long long> ExponentPairing::pair(const I64Vector& u, const I64Vector& v) const {
  std::vector<long long> out;
  for (const auto& c : components) out.push_back(u.dot(c * v));
  return out;
}

bool ExponentPairing::orthogonal(const I64Vector& u, const I64Vector& v) const {
  for (const auto& c : components)
    if (u.dot(c * v) != 0) return false;
  return true;
}

ExponentPairing pairing_from_matrix(const CommutationMatrix& M) {
  ExponentPairing E;
  E.m = M.m;
  E.k = static_cast<int>(M.nvars());
  E.components.assign(E.k, I64Matrix::Zero(M.m, M.m));
  for (int i = 0; i < M.m; ++i) {
    for (int j = 0; j < M.m; ++j) {
      const auto e = scalar_as_monomial(M(i, j));
      if (!e) {
        throw std::invalid_argument("commutation entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") is not a monomial: " + to_string(M(i, j), M.lattice));
      }
      for (int c = 0; c < E.k; ++c) E.components[c](i, j) = (*e)[c];
    }
  }
  for (const auto& c : E.components)
    if (!is_alternating(c)) throw std::invalid_argument("exponent pairing is not alternating");
  return E;
}

ExponentPairing zero_pairing(int m, int k) {
  ExponentPairing E;
  E.m = m;
  E.k = k;
  E.components.assign(k, I64Matrix::Zero(m, m));
  return E;
}

bool verify_witness(const ExponentPairing& E, const Witness& w) {
  for (const auto& v : w.vectors)
    if (v.size() != E.m) return false;
  for (std::size_t a = 0; a < w.vectors.size(); ++a)
    for (std::size_t b = a; b < w.vectors.size(); ++b)
      if (!E.orthogonal(w.vectors[a], w.vectors[b])) return false;
  if (w.vectors.empty()) return true;
  return integer_rank(stack_rows(w.vectors, E.m)) == w.size();
}

SingleParameterRank max_isotropic_rank_single(const I64Matrix& S) {
  if (!is_alternating(S)) throw std::invalid_argument("pairing matrix is not alternating");
  const int m = static_cast<int>(S.rows());
  const int r = integer_rank(to_big(S));

  using RVec = std::vector<cpp_rational>;
  auto omega = [&](const RVec& a, const RVec& b) {
    cpp_rational s = 0;
    for (int i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < m; ++j)
        if (S(i, j) != 0 && b[j] != 0) s += a[i] * S(i, j) * b[j];
    }
    return s;
  };

  std::vector<RVec> work;
  for (int i = 0; i < m; ++i) {
    RVec e(m, 0);
    e[i] = 1;
    work.push_back(std::move(e));
  }
  std::vector<RVec> picked;
  while (!work.empty()) {
    RVec u = work.front();
    work.erase(work.begin());
    auto partner = std::find_if(work.begin(), work.end(), [&](const RVec& w) { return omega(u, w) != 0; });
    if (partner == work.end()) {
      picked.push_back(std::move(u));  // radical of what is left
      continue;
    }
    RVec v = *partner;
    work.erase(partner);
    const cpp_rational c = omega(u, v);
    for (auto& w : work) {
      const cpp_rational a = omega(w, v) / c;
      const cpp_rational b = omega(w, u) / c;
      for (int i = 0; i < m; ++i) w[i] = w[i] - a * u[i] + b * v[i];
    }
    picked.push_back(std::move(u));  // one vector per hyperbolic pair
  }

  SingleParameterRank out;
  out.rank = m - r / 2;
  for (const auto& p : picked) {
    cpp_int den = 1;
    for (const auto& x : p) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<cpp_int> ints;
    cpp_int g = 0;
    for (const auto& x : p) {
      ints.push_back(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x)));
      g = boost::multiprecision::gcd(g, ints.back());
    }
    I64Vector v(m);
    for (int i = 0; i < m; ++i) {
      const cpp_int e = ints[i] / g;
      if (boost::multiprecision::abs(e) > cpp_int(std::numeric_limits<long long>::max())) {
        throw std::overflow_error("witness entry does not fit in 64 bits");
      }
      v(i) = static_cast<long long>(e);
    }
    out.witness.vectors.push_back(std::move(v));
  }
  if (out.witness.size() != out.rank) throw std::logic_error("symplectic reduction produced the wrong witness size");
  return out;
}

int isotropic_upper_bound(const ExponentPairing& E) { return restricted_bound(E, bounding_forms(E), {}); }

std::optional<Witness> isotropic_witness_search(const ExponentPairing& E, int target, int height,
                                                const SearchOptions& options) {
  if (height < 1) throw std::invalid_argument("search height must be >= 1");
  if (target > E.m) return std::nullopt;
  if (target <= 0) return Witness{};
  // iterative deepening; heights past the candidate budget are skipped once
  // a smaller height has been tried
  for (int h = 1; h <= height; ++h) {
    std::optional<Candidates> cands;
    try {
      cands = enumerate_candidates(E.m, h, options.max_candidates);
    } catch (const BudgetExceeded&) {
      if (h == 1) throw;
      break;
    }
    Search search(E, *cands, target, options);
    search.run();
    if (search.found()) {
      Witness w{search.best()};
      if (!verify_witness(E, w)) throw std::logic_error("search returned an invalid witness");
      return w;
    }
  }
  return std::nullopt;
}

Witness best_isotropic_witness(const ExponentPairing& E, const SearchOptions& options) {
  const int target = isotropic_upper_bound(E);
  Witness best;
  for (int h = 1; h <= options.height && best.size() < target; ++h) {
    std::optional<Candidates> cands;
    try {
      cands = enumerate_candidates(E.m, h, options.max_candidates);
    } catch (const BudgetExceeded&) {
      break;
    }
    Search search(E, *cands, target, options);
    search.run();
    if (static_cast<int>(search.best().size()) > best.size()) best.vectors = search.best();
  }
  if (!verify_witness(E, best)) throw std::logic_error("search returned an invalid witness");
  return best;
}

std::string to_string(DimensionMethod method) {
  switch (method) {
    case DimensionMethod::theorem_p1: return "theorem-p1";
    case DimensionMethod::theorem_q1: return "theorem-q1";
    case DimensionMethod::exact_single_parameter: return "exact-single-parameter";
    case DimensionMethod::search: return "search";
  }
  return "unknown";
}

int DimensionReport::d() const {
  if (!is_point()) {
    throw IndeterminateBound("dimension only known to lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "]; raise the search height");
  }
  return lo;
}

DimensionReport dim_cn(const AlgebraSpec& spec, const SearchOptions& options) {
  const int n = spec.n;
  const ExponentPairing E = pairing_from_matrix(cn_matrix(spec));
  const Scalar unit = Scalar::one(spec.nvars());
  auto all_one = [&](const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return s == unit; });
  };

  DimensionReport r;
  const bool single = is_single_parameter(spec.kind) || (spec.kind == Kind::custom && E.k <= 1);
  if (single) {
    r.method = DimensionMethod::exact_single_parameter;
    if (E.k == 0) {
      r.lo = r.hi = E.m;
      for (int i = 0; i < E.m; ++i) r.witness.vectors.push_back(basis_vector(E.m, i));
    } else {
      auto res = max_isotropic_rank_single(E.components[0]);
      r.lo = r.hi = res.rank;
      r.witness = std::move(res.witness);
    }
  } else if (spec.kind == Kind::generic_p1 || spec.kind == Kind::graded_weyl ||
             (spec.kind == Kind::custom && all_one(spec.p))) {
    r.method = DimensionMethod::theorem_p1;
    r.lo = r.hi = n;
    for (int i = 0; i < n; ++i) r.witness.vectors.push_back(basis_vector(E.m, i));
  } else if (spec.kind == Kind::generic_q1 || (spec.kind == Kind::custom && all_one(spec.q))) {
    r.method = DimensionMethod::theorem_q1;
    r.lo = r.hi = n + 1;
    for (int i = 0; i < n; ++i) r.witness.vectors.push_back(basis_vector(E.m, i));
    r.witness.vectors.push_back(basis_vector(E.m, n));
  } else {
    r.method = DimensionMethod::search;
    r.hi = isotropic_upper_bound(E);
    r.witness = best_isotropic_witness(E, options);
    r.lo = r.witness.size();
  }

  if (!verify_witness(E, r.witness)) throw std::logic_error("dimension witness does not verify");
  if (r.method == DimensionMethod::theorem_p1 || r.method == DimensionMethod::theorem_q1) {
    bool confirmed = false;
    try {
      confirmed = isotropic_witness_search(E, r.lo, options.height, options).has_value();
    } catch (const BudgetExceeded&) {
      confirmed = false;
    }
    r.search_confirmed = confirmed;
  }
  return r;
}

BernsteinReport bernstein_bound(const AlgebraSpec& spec, const SearchOptions& options) {
  const DimensionReport dim = dim_cn(spec, options);
  BernsteinReport b;
  b.gkdim_algebra = 2 * spec.n;
  b.d = dim.d();
  b.bound = b.gkdim_algebra - b.d;
  return b;
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : w.vectors) out.push_back(std::vector<long long>(v.data(), v.data() + v.size()));
  return out;
}

nlohmann::json to_json(const DimensionReport& r) {
  nlohmann::json j;
  if (r.is_point()) {
    j["d"] = r.lo;
  } else {
    j["d"] = {r.lo, r.hi};
  }
  j["witness"] = to_json(r.witness);
  j["method"] = to_string(r.method);
  if (r.search_confirmed) j["search_confirmed"] = *r.search_confirmed;
  return j;
}

nlohmann::json to_json(const BernsteinReport& r) {
  return {{"gkdim_algebra", r.gkdim_algebra}, {"d", r.d}, {"bound", r.bound}};
}

}  // namespace qalg
