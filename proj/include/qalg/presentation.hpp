#pragma once

// Parameter data and defining relations of the algebras K_n(P, Q, Gamma):
//
//   x_i x_j = q_i p_j^-1 g_ij x_j x_i              (i < j)
//   y_i y_j = g_ij y_j y_i                         (i < j)
//   x_i y_j = p_j g_ij^-1 y_j x_i                  (i < j)
//   x_i y_j = q_j g_ij^-1 y_j x_i                  (i > j)
//   x_i y_i - q_i y_i x_i = sum_{l<i} (q_l - p_l) y_l x_l
//
// with Gamma multiplicatively antisymmetric and p_i q_i^-1 not a root of unity.

#include "qalg/pbw_element.hpp"
#include "qalg/scalars.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

enum class Kind { generic, generic_p1, generic_q1, symplectic, euclidean, heisenberg, graded_weyl, custom };

std::string to_string(Kind kind);
Kind parse_kind(std::string_view name);

/// Single-parameter presets: every parameter is a power of one symbol q.
bool is_single_parameter(Kind kind);

/// Invalid configuration. `field` names the offending JSON field when known.
struct ConfigError : std::invalid_argument {
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field.empty() ? what : field + ": " + what), field(std::move(field)) {}
  std::string field;
};

struct AlgebraSpec {
  int n = 0;
  Kind kind = Kind::generic;
  ParameterLattice lattice;
  std::vector<Scalar> q;                   // q_1..q_n
  std::vector<Scalar> p;                   // p_1..p_n
  std::vector<std::vector<Scalar>> gamma;  // gamma[i][j], 0-based
  /// Exact rational values for some symbols (rational presets). Symbolic
  /// computations ignore it; specialized() applies it.
  std::map<std::string, Rational> specialization;

  std::size_t nvars() const { return lattice.size(); }
  // 1-based accessors
  const Scalar& qi(int i) const { return q.at(i - 1); }
  const Scalar& pi(int i) const { return p.at(i - 1); }
  const Scalar& g(int i, int j) const { return gamma.at(i - 1).at(j - 1); }

  /// Same algebra with the specialization substituted; identity when none.
  AlgebraSpec specialized() const;

  /// Throws ConfigError when an invariant fails.
  void validate() const;
};

/// Built-in presets. `q` is only accepted for single-parameter kinds; when it
/// is absent the preset stays symbolic in q.
AlgebraSpec build_spec(int n, Kind kind, std::optional<Rational> q = std::nullopt);

/// Free-form assignment. Every listed symbol is an independent generic
/// parameter; entries are monomial strings such as "q1^2*g12^-1" or "3/2".
struct CustomParameters {
  std::vector<std::string> symbols;
  std::vector<std::string> q;
  std::vector<std::string> p;
  std::vector<std::vector<std::string>> gamma;  // empty means all ones
};

AlgebraSpec build_custom_spec(int n, const CustomParameters& params);

/// g * h = result, where g comes after h in PBW order.
struct RewriteRule {
  int left = 0;
  int right = 0;
  PBWElement result;
};

/// One rule per unordered pair of distinct generators.
std::vector<RewriteRule> rewrite_rules(const AlgebraSpec& spec);

/// z_i = sum_{l <= i} (q_l - p_l) y_l x_l; casimir(spec, 0) is the zero element.
PBWElement casimir(const AlgebraSpec& spec, int i);

/// Data for building K_{m+1} from K_m as an ambiskew ring
/// K_m[x; alpha][y; beta, delta] with yx - rho xy = u - rho alpha(u).
/// Automorphisms act diagonally; vectors hold multipliers on x_i / y_i, i <= m.
struct AmbiskewStep {
  int m = 0;
  Scalar rho;
  PBWElement u;
  std::vector<Scalar> alpha_x, alpha_y;
  std::vector<Scalar> beta_x, beta_y;
  /// automorphism induced by u: u a = gamma(a) u
  std::vector<Scalar> gamma_x, gamma_y;
};

AmbiskewStep ambiskew_step(const AlgebraSpec& spec, int m);

/// Apply a diagonal automorphism to an element of K_m (m = multiplier count).
PBWElement apply_diagonal(const PBWElement& f, const std::vector<Scalar>& on_x, const std::vector<Scalar>& on_y);

// Config document: {"n": int, "kind": string, "q": string?, "custom": {...}?}
// custom: {"symbols": [..], "q": [..], "p": [..], "gamma": [[..]]?}
AlgebraSpec spec_from_json(const nlohmann::json& config);
nlohmann::json spec_to_json(const AlgebraSpec& spec);

}  // namespace qalg
