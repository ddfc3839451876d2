#pragma once

#include "qalg/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace qalg {

// Generators are identified by their position in the PBW order
//   y1 < x1 < y2 < x2 < ... < yn < xn,
// so y_i sits at 2(i-1) and x_i at 2(i-1)+1 (i is 1-based).
inline int gen_y(int i) { return 2 * (i - 1); }
inline int gen_x(int i) { return 2 * (i - 1) + 1; }
inline int gen_index(int g) { return g / 2 + 1; }
inline bool gen_is_x(int g) { return g % 2 == 1; }
std::string gen_name(int g);

/// Exponents (a1, b1, ..., an, bn) of y1^a1 x1^b1 ... yn^an xn^bn.
using PBWMonomial = std::vector<int>;

int degree(const PBWMonomial& m);

/// Finite linear combination of PBW monomials with nonzero Scalar coefficients.
class PBWElement {
 public:
  PBWElement() = default;
  PBWElement(int n, std::size_t nvars) : n_(n), nvars_(nvars) {}

  static PBWElement monomial(int n, PBWMonomial m, Scalar coeff);
  static PBWElement one(int n, std::size_t nvars);
  static PBWElement generator(int n, std::size_t nvars, int g);

  int rank() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  /// Adds c * m, dropping the entry if it cancels.
  void add_term(const PBWMonomial& m, const Scalar& c);

  PBWElement& operator+=(const PBWElement& rhs);
  PBWElement& operator-=(const PBWElement& rhs);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Scalar& c, const PBWElement& f);

  friend bool operator==(const PBWElement& a, const PBWElement& b);

 private:
  void require_compatible(const PBWElement& rhs) const;

  int n_ = 0;
  std::size_t nvars_ = 0;
  std::map<PBWMonomial, Scalar> terms_;
};

/// "y1^2 x1" style text; the empty monomial is "1".
std::string format_pbw_monomial(const PBWMonomial& m);

/// Terms in monomial order, each "(num)/(den)·monomial", joined by " + ".
std::string to_string(const PBWElement& f, const ParameterLattice& lattice);

}  // namespace qalg
