#pragma once

// Exact coefficient field: fractions of sparse Laurent polynomials with
// arbitrary-precision rational coefficients over a fixed list of parameter
// symbols. Generic parameters are free abelian generators, so a monomial
// q^e with e != 0 is never a root of unity.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer exponent vector over the parameter symbols.
using Exponents = std::vector<int>;

struct LatticeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Ordered, duplicate-free list of parameter symbol names.
class ParameterLattice {
 public:
  ParameterLattice() = default;
  explicit ParameterLattice(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const ParameterLattice&) const = default;

 private:
  std::vector<std::string> symbols_;
};

/// Sparse Laurent polynomial. Terms are kept sorted by exponent vector with
/// no zero coefficients.
class LaurentPoly {
 public:
  struct Term {
    Exponents exponents;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  LaurentPoly(std::size_t nvars, std::vector<Term> terms);

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(Exponents e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiply by c * x^shift.
  LaurentPoly times_monomial(const Exponents& shift, const Rational& c) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  void canonicalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Element of the coefficient field: num / den, den != 0.
///
/// Fractions are not reduced by a multivariate gcd. Normalization only pulls
/// a monomial denominator into the numerator, strips monomial content from
/// the denominator, and makes its leading coefficient 1. Equality is decided
/// by cross-multiplication.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::size_t nvars) : num_(nvars), den_(LaurentPoly::constant(nvars, 1)) {}
  Scalar(LaurentPoly num, LaurentPoly den);
  explicit Scalar(LaurentPoly num);

  static Scalar zero(std::size_t nvars) { return Scalar(nvars); }
  static Scalar one(std::size_t nvars) { return constant(nvars, 1); }
  static Scalar constant(std::size_t nvars, const Rational& c);
  static Scalar variable(std::size_t nvars, std::size_t index, int power = 1);
  static Scalar monomial(Exponents e, const Rational& c = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws DivisionByZero when b == 0.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::constant(0, 1);
};

enum class ArithOp { add, sub, mul, div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

/// Exact equality as rational functions. Throws LatticeMismatch if the
/// operands live over different symbol counts.
bool scalar_eq(const Scalar& a, const Scalar& b);

/// Exponent vector of a, if a equals a bare monomial (coefficient 1).
std::optional<Exponents> scalar_as_monomial(const Scalar& a);

/// Coefficient and exponent vector of a, if a equals c * x^e with c != 0.
std::optional<std::pair<Rational, Exponents>> scalar_as_scaled_monomial(const Scalar& a);

/// True when a = c * x^e can be a root of unity: e == 0 and c in {1, -1}.
bool is_torsion_monomial(const Scalar& a);

std::string to_string(const Rational& r);
std::string to_string(const LaurentPoly& p, const ParameterLattice& lattice);
/// Canonical fraction text "(num)/(den)".
std::string to_string(const Scalar& s, const ParameterLattice& lattice);

/// Monomial text such as "q1^2*g12^-1"; the zero vector renders as "1".
std::string format_monomial(const Exponents& e, const ParameterLattice& lattice);

/// Parse "q1^2*g12^-1", "1", "-2/3*q", "q^-2". Factors are symbols with an
/// optional integer power or rational constants, joined by '*'.
Scalar parse_monomial(std::string_view text, const ParameterLattice& lattice);

Rational parse_rational(std::string_view text);

/// Replace the symbols named in `values` by exact rationals. The result
/// lives over `target`, which must list the remaining symbols in order.
/// Throws DivisionByZero if a denominator (or a negative power of a
/// symbol) evaluates to zero.
Scalar substitute(const Scalar& s, const ParameterLattice& source,
                  const std::map<std::string, Rational>& values, const ParameterLattice& target);

}  // namespace qalg
