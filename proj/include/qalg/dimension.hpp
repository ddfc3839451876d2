#pragma once

// dim(C_n) as the largest rank of a sublattice of Z^m on which the
// commutator bicharacter is trivial, and the bound gkdim(M) >= 2n - d.

#include "qalg/integer_matrix.hpp"
#include "qalg/presentation.hpp"
#include "qalg/torus.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

/// Additive form of a commutation matrix: component c holds the exponent of
/// lattice symbol c in lambda_ij.
struct ExponentPairing {
  int m = 0;
  int k = 0;
  std::vector<I64Matrix> components;

  /// u^T E_c v for every component c.
  std::vector<long long> pair(const I64Vector& u, const I64Vector& v) const;
  bool orthogonal(const I64Vector& u, const I64Vector& v) const;
};

/// Throws std::invalid_argument on a non-monomial entry (a rational factor
/// other than 1 has no exponent vector).
ExponentPairing pairing_from_matrix(const CommutationMatrix& M);

ExponentPairing zero_pairing(int m, int k);

struct Witness {
  std::vector<I64Vector> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
};

/// Pairwise isotropic and linearly independent.
bool verify_witness(const ExponentPairing& E, const Witness& w);

struct SingleParameterRank {
  int rank = 0;
  Witness witness;
};

/// m - rank(S)/2 for an alternating integer S, with a witness from rational
/// symplectic reduction. Throws std::invalid_argument if S is not alternating.
SingleParameterRank max_isotropic_rank_single(const I64Matrix& S);

struct SearchOptions {
  int height = 3;
  std::size_t node_limit = 200'000;
  std::size_t max_candidates = 2'000'000;
};

/// Upper bound on the rank of any isotropic sublattice: min over the
/// components and a few fixed integer combinations F of m - rank(F)/2.
int isotropic_upper_bound(const ExponentPairing& E);

/// Backtracking over primitive vectors with entries in [-h, h], ordered by
/// max-norm, then L1 norm, then lexicographically, for h = 1..height. Returns
/// a witness of size >= target, or nothing when the bounded search is
/// exhausted (or the node limit is hit). Heights whose candidate set exceeds
/// options.max_candidates are skipped; BudgetExceeded only if h = 1 is too big.
std::optional<Witness> isotropic_witness_search(const ExponentPairing& E, int target, int height,
                                                const SearchOptions& options = {});

/// Largest witness found over heights 1..options.height.
Witness best_isotropic_witness(const ExponentPairing& E, const SearchOptions& options = {});

enum class DimensionMethod { theorem_p1, theorem_q1, exact_single_parameter, search };
std::string to_string(DimensionMethod method);

struct DimensionReport {
  int lo = 0;
  int hi = 0;
  Witness witness;
  DimensionMethod method = DimensionMethod::search;
  /// theorem methods: whether the search found a witness of rank d on its own
  std::optional<bool> search_confirmed;

  bool is_point() const { return lo == hi; }
  int d() const;  // throws unless is_point()
};

/// Always evaluated on the symbolic parameters (any rational specialization
/// is ignored: exponents are only meaningful for independent symbols).
DimensionReport dim_cn(const AlgebraSpec& spec, const SearchOptions& options = {});

struct IndeterminateBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BernsteinReport {
  int gkdim_algebra = 0;
  int d = 0;
  int bound = 0;
};

/// Throws IndeterminateBound when dim_cn only gives an interval.
BernsteinReport bernstein_bound(const AlgebraSpec& spec, const SearchOptions& options = {});

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const DimensionReport& r);
nlohmann::json to_json(const BernsteinReport& r);

}  // namespace qalg
