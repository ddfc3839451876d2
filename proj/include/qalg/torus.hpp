#pragma once

// Quantum tori K[X_1^±1, ..., X_m^±1] with X_i X_j = lambda_ij X_j X_i, and
// the rank 2n tori C_n (basis z_1..z_n, y_1..y_n) and S_n (z_1..z_n, v_1..v_n
// with v_i one of x_i, y_i).

#include "qalg/check.hpp"
#include "qalg/presentation.hpp"
#include "qalg/scalars.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace qalg {

struct CommutationMatrix {
  int m = 0;
  ParameterLattice lattice;
  std::vector<std::vector<Scalar>> entries;  // 0-based

  const Scalar& operator()(int i, int j) const { return entries.at(i).at(j); }
  std::size_t nvars() const { return lattice.size(); }

  /// lambda_ii = 1 and lambda_ij lambda_ji = 1
  bool is_antisymmetric() const;
  bool operator==(const CommutationMatrix& rhs) const;
};

/// Identity torus (commutative) of rank m.
CommutationMatrix trivial_commutation(int m, const ParameterLattice& lattice);

nlohmann::json to_json(const CommutationMatrix& M);
CommutationMatrix commutation_from_json(const nlohmann::json& j, const ParameterLattice& lattice);

using TorusExponent = std::vector<int>;

class TorusElement {
 public:
  TorusElement() = default;
  TorusElement(int m, std::size_t nvars) : m_(m), nvars_(nvars) {}

  static TorusElement monomial(TorusExponent u, const Scalar& c);
  static TorusElement one(int m, std::size_t nvars);
  /// X_i^power, i 0-based
  static TorusElement generator(int m, std::size_t nvars, int i, int power = 1);

  int rank() const { return m_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<TorusExponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TorusExponent& u, const Scalar& c);
  TorusElement& operator+=(const TorusElement& rhs);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b);
  friend TorusElement operator*(const Scalar& c, const TorusElement& f);
  friend bool operator==(const TorusElement& a, const TorusElement& b);

 private:
  int m_ = 0;
  std::size_t nvars_ = 0;
  std::map<TorusExponent, Scalar> terms_;
};

std::string to_string(const TorusElement& f, const ParameterLattice& lattice);

/// c(u, v) = prod_{i > j} lambda_ij^(u_i v_j), so X^u X^v = c(u, v) X^(u+v)
/// with X^u = X_1^u_1 ... X_m^u_m.
Scalar cocycle(const CommutationMatrix& M, const TorusExponent& u, const TorusExponent& v);

/// [X^u, X^v] = c(u, v) c(v, u)^-1.
Scalar bicharacter(const CommutationMatrix& M, const TorusExponent& u, const TorusExponent& v);

TorusElement t_mul(const CommutationMatrix& M, const TorusElement& a, const TorusElement& b);

/// Per index: true selects x_i, false selects y_i.
struct LocalizationChoice {
  std::vector<bool> use_x;

  static LocalizationChoice all_y(int n) { return {std::vector<bool>(n, false)}; }
  static LocalizationChoice all_x(int n) { return {std::vector<bool>(n, true)}; }
  /// Bit i of mask selects x_{i+1}.
  static LocalizationChoice from_mask(int n, unsigned mask);
  std::string to_string() const;  // e.g. "x1 y2"
};

/// Lambda(C_n) from the closed form: z-z block trivial, (z_i, y_j) = q_j for
/// i >= j and p_j for i < j, (y_i, y_j) = gamma_ij.
CommutationMatrix cn_matrix(const AlgebraSpec& spec);

/// Lambda(S_n) read off the defining relations and the commutation of z_i
/// with x_j, y_j.
CommutationMatrix sn_matrix(const AlgebraSpec& spec, const LocalizationChoice& choice);

/// Lambda(C_n) of the quantized Weyl algebra with parameters q_i and
/// Lambda = gamma, from its own z/y commutation rules.
CommutationMatrix quantum_weyl_cn_matrix(const AlgebraSpec& spec);

/// theta: C_n -> S_n, theta(z_i) = z_i, theta(y_i) = y_i or z_i x_i^-1.
/// Checks every C_n commutation relation on the images, and that each
/// theta(y_i) is a unit.
CheckReport theta_check(const AlgebraSpec& spec, const LocalizationChoice& choice);

}  // namespace qalg
