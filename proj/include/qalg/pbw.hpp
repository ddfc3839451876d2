#pragma once

// Normal forms on the PBW basis y1^a1 x1^b1 ... yn^an xn^bn.

#include "qalg/check.hpp"
#include "qalg/pbw_element.hpp"
#include "qalg/presentation.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace qalg {

/// Sequence of generator positions (see gen_x / gen_y).
using Word = std::vector<int>;

/// Whitespace-separated generator names, e.g. "x2 y1 x1". "1" or "" is the
/// empty word.
Word parse_word(std::string_view text, int n);
std::string format_word(const Word& w);

/// Normal form of a word by repeatedly rewriting the leftmost adjacent pair
/// that is out of PBW order.
PBWElement normal_form(const AlgebraSpec& spec, const Word& w);

/// Multiplication engine bound to one algebra. Products of a PBW monomial by
/// a generator are memoized, so an instance is not safe to share between
/// threads; copy it instead.
class PbwAlgebra {
 public:
  explicit PbwAlgebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  int rank() const { return spec_.n; }
  std::size_t nvars() const { return spec_.nvars(); }

  PBWElement zero() const { return PBWElement(spec_.n, nvars()); }
  PBWElement one() const { return PBWElement::one(spec_.n, nvars()); }
  PBWElement gen(int g) const { return PBWElement::generator(spec_.n, nvars(), g); }
  PBWElement x(int i) const { return gen(gen_x(i)); }
  PBWElement y(int i) const { return gen(gen_y(i)); }
  PBWElement z(int i) const { return casimir(spec_, i); }
  Scalar scalar(const Rational& c) const { return Scalar::constant(nvars(), c); }

  PBWElement multiply(const PBWElement& f, const PBWElement& g);
  PBWElement times_generator(const PBWElement& f, int g);
  PBWElement word(const Word& w);
  PBWElement power(const PBWElement& f, int k);

  /// Products of the left factors, in order.
  PBWElement product(std::initializer_list<PBWElement> factors);

 private:
  const PBWElement& monomial_times_generator(const PBWMonomial& m, int g);

  AlgebraSpec spec_;
  // swap_[g][h], g > h: coefficient c with g h = c h g (+ extra for x_i y_i)
  std::vector<std::vector<Scalar>> swap_;
  std::vector<PBWElement> extra_;  // per index i: z_{i-1}
  std::map<std::pair<PBWMonomial, int>, PBWElement> cache_;
};

/// Bilinear product; agrees with normal_form on monomials.
PBWElement multiply(const AlgebraSpec& spec, const PBWElement& f, const PBWElement& g);

/// Each defining relation as left side minus right side, via multiply.
CheckReport verify_relations(const AlgebraSpec& spec);

/// Normality of z_i: commutation with every y_j, x_j, z_j and
/// x_i y_i - p_i y_i x_i = z_i.
CheckReport verify_normality(const AlgebraSpec& spec, int i);

/// Ambiskew data for K_{m+1} over K_m: alpha(u) = p_{m+1} u,
/// y x - rho x y = u - rho alpha(u) = -q_{m+1}^-1 z_m, the twisting of lower
/// generators by alpha and beta, u a = gamma(a) u, and
/// z_{m+1} = (q_{m+1} - p_{m+1}) (y x - u).
CheckReport verify_ambiskew(const AlgebraSpec& spec, int m);

enum class SkewForm {
  xk_y,    // x_i^k y_i = q_i^k y_i x_i^k + [k] z_{i-1} x_i^{k-1}
  x_yk,    // x_i y_i^k = q_i^k y_i^k x_i + [k] y_i^{k-1} z_{i-1}
  k1_base  // x_1 y_1^k = q_1^k y_1^k x_1 and x_1^k y_1 = q_1^k y_1 x_1^k
};

SkewForm parse_skew_form(std::string_view name);
std::string to_string(SkewForm form);

/// [k] = (q_i^k - p_i^k) / (q_i - p_i) as a field element.
Scalar skew_coefficient(const AlgebraSpec& spec, int i, int k);

/// Engine product against the closed form. Throws std::invalid_argument on a
/// bad form/index combination (xk_y, x_yk need i >= 2; k1_base needs i = 1).
CheckReport skew_power_identity(const AlgebraSpec& spec, int i, int k, SkewForm form);

struct FuzzResult {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  std::string first_failure;  // the three words, when any trial failed
};

/// Random word triples (lengths 0..max_length) from std::mt19937_64(seed):
/// (fg)h = f(gh), and both equal normal_form of the concatenated word.
FuzzResult associativity_fuzz(const AlgebraSpec& spec, std::size_t trials, int max_length, std::uint64_t seed);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GrowthBudget {
  std::size_t max_words = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GrowthResult {
  /// counts[m] = dimension of the span of all words of length <= m
  std::vector<std::size_t> counts;
  /// log-log slope of counts against the centred filtration degree over the
  /// last three lengths; empty when fewer than two lengths are available
  std::optional<double> exponent;
};

GrowthResult growth_count(const AlgebraSpec& spec, int max_length, const GrowthBudget& budget = {});

/// Least-squares slope of log counts[m] against log(m + (g + 1) / 2) for m in
/// [first, last], g the number of generators.
double fit_growth_exponent(const std::vector<std::size_t>& counts, int generators, int first, int last);

}  // namespace qalg
