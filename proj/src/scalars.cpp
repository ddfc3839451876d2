#include "qalg/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qalg {

namespace {

void require_same_lattice(std::size_t a, std::size_t b) {
  if (a != b) {
    throw LatticeMismatch("scalar operands live over " + std::to_string(a) + " and " +
                          std::to_string(b) + " parameter symbols");
  }
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DivisionByZero("negative power of zero");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational result = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// ParameterLattice

ParameterLattice::ParameterLattice(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("empty parameter symbol name");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate parameter symbol '" + s + "'");
  }
}

std::optional<std::size_t> ParameterLattice::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.exponents.size() != nvars_) {
      throw LatticeMismatch("term exponent vector has length " + std::to_string(t.exponents.size()) +
                            ", expected " + std::to_string(nvars_));
    }
  }
  canonicalize();
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents e, const Rational& c) {
  LaurentPoly p(e.size());
  if (c != 0) p.terms_.push_back({std::move(e), c});
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_lattice(nvars_, rhs.nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponents < b->exponents)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponents < a->exponents) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({std::move(a->exponents), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_lattice(a.nvars_, b.nvars_);
  std::map<Exponents, Rational> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[add_exponents(s.exponents, t.exponents)] += s.coeff * t.coeff;
  }
  LaurentPoly out(a.nvars_);
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.push_back({e, std::move(c)});
  }
  return out;
}

LaurentPoly LaurentPoly::times_monomial(const Exponents& shift, const Rational& c) const {
  require_same_lattice(nvars_, shift.size());
  LaurentPoly out(nvars_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({add_exponents(t.exponents, shift), t.coeff * c});
  // a shift preserves the lexicographic order of exponent vectors
  return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_lattice(num_.nvars(), den_.nvars());
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  normalize();
}

Scalar::Scalar(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), 1)) {}

Scalar Scalar::constant(std::size_t nvars, const Rational& c) { return Scalar(LaurentPoly::constant(nvars, c)); }

Scalar Scalar::variable(std::size_t nvars, std::size_t index, int power) {
  Exponents e(nvars, 0);
  e.at(index) = power;
  return Scalar(LaurentPoly::monomial(std::move(e)));
}

Scalar Scalar::monomial(Exponents e, const Rational& c) { return Scalar(LaurentPoly::monomial(std::move(e), c)); }

void Scalar::normalize() {
  const std::size_t k = num_.nvars();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(k, 1);
    return;
  }
  if (den_.is_single_term()) {
    const auto& t = den_.terms().front();
    Exponents neg(k);
    for (std::size_t i = 0; i < k; ++i) neg[i] = -t.exponents[i];
    num_ = num_.times_monomial(neg, Rational(1) / t.coeff);
    den_ = LaurentPoly::constant(k, 1);
    return;
  }
  // strip monomial content of the denominator and make it monic in its
  // largest term
  Exponents low = den_.terms().front().exponents;
  for (const auto& t : den_.terms()) {
    for (std::size_t i = 0; i < k; ++i) low[i] = std::min(low[i], t.exponents[i]);
  }
  for (auto& x : low) x = -x;
  const Rational lead = Rational(1) / den_.terms().back().coeff;
  num_ = num_.times_monomial(low, lead);
  den_ = den_.times_monomial(low, lead);
  if (num_ == den_) {
    num_ = LaurentPoly::constant(k, 1);
    den_ = LaurentPoly::constant(k, 1);
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_lattice(a.nvars(), b.nvars());
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_lattice(a.nvars(), b.nvars());
  if (a.is_zero() || b.is_zero()) return Scalar(a.nvars());
  if (a.den_ == b.num_ && b.den_ == a.num_) return Scalar::one(a.nvars());
  if (a.den_ == b.num_) return Scalar(a.num_, b.den_);
  if (b.den_ == a.num_) return Scalar(b.num_, a.den_);
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_lattice(a.nvars(), b.nvars());
  if (b.is_zero()) throw DivisionByZero("division by the zero scalar");
  return a * b.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (num_.is_single_term() && den_.is_single_term()) {
    const auto& t = num_.terms().front();
    Exponents scaled(t.exponents.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = static_cast<int>(t.exponents[i] * e);
    return Scalar::monomial(std::move(scaled), rational_pow(t.coeff, e));
  }
  Scalar result = one(nvars());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_lattice(a.nvars(), b.nvars());
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

std::optional<std::pair<Rational, Exponents>> scalar_as_scaled_monomial(const Scalar& a) {
  // normalize() turns every monomial denominator into 1, so a monomial value
  // with a polynomial denominator can only arise as num == c * x^e * den
  if (a.num().is_single_term() && a.den().is_single_term()) {
    const auto& n = a.num().terms().front();
    const auto& d = a.den().terms().front();
    Exponents e(n.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = n.exponents[i] - d.exponents[i];
    return std::make_pair(Rational(n.coeff / d.coeff), e);
  }
  if (a.num().terms().size() != a.den().terms().size() || a.is_zero()) return std::nullopt;
  const auto& n0 = a.num().terms().front();
  const auto& d0 = a.den().terms().front();
  Exponents e(n0.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = n0.exponents[i] - d0.exponents[i];
  const Rational c = n0.coeff / d0.coeff;
  if (a.den().times_monomial(e, c) != a.num()) return std::nullopt;
  return std::make_pair(c, e);
}

std::optional<Exponents> scalar_as_monomial(const Scalar& a) {
  auto m = scalar_as_scaled_monomial(a);
  if (!m || m->first != 1) return std::nullopt;
  return m->second;
}

bool is_torsion_monomial(const Scalar& a) {
  auto m = scalar_as_scaled_monomial(a);
  if (!m) return false;
  const bool trivial = std::all_of(m->second.begin(), m->second.end(), [](int x) { return x == 0; });
  return trivial && (m->first == 1 || m->first == -1);
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_monomial(const Exponents& e, const ParameterLattice& lattice) {
  require_same_lattice(e.size(), lattice.size());
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += lattice.symbol(i);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const LaurentPoly& p, const ParameterLattice& lattice) {
  if (p.is_zero()) return "0";
  std::string out;
  // largest exponent vector first reads more naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const bool is_const = std::all_of(it->exponents.begin(), it->exponents.end(), [](int x) { return x == 0; });
    Rational c = it->coeff;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (is_const) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += format_monomial(it->exponents, lattice);
    }
  }
  return out;
}

std::string to_string(const Scalar& s, const ParameterLattice& lattice) {
  return "(" + to_string(s.num(), lattice) + ")/(" + to_string(s.den(), lattice) + ")";
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto parse_int = [](std::string_view s) -> BigInt {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("rational literal with zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Scalar parse_monomial(std::string_view text, const ParameterLattice& lattice) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty monomial");
  Exponents e(lattice.size(), 0);
  Rational c = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto star = text.find('*', pos);
    const auto factor = trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.empty()) throw std::invalid_argument("empty factor in monomial '" + std::string(text) + "'");
    const char first = factor.front();
    if (std::isdigit(static_cast<unsigned char>(first)) || first == '-' || first == '+') {
      c *= parse_rational(factor);
    } else {
      const auto caret = factor.find('^');
      const auto name = trim(factor.substr(0, caret));
      const auto idx = lattice.index_of(name);
      if (!idx) throw std::invalid_argument("unknown parameter symbol '" + std::string(name) + "'");
      int power = 1;
      if (caret != std::string_view::npos) {
        const Rational r = parse_rational(factor.substr(caret + 1));
        if (denominator(r) != 1) throw std::invalid_argument("non-integer exponent in '" + std::string(factor) + "'");
        power = static_cast<int>(numerator(r));
      }
      e[*idx] += power;
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Scalar::monomial(std::move(e), c);
}

Scalar substitute(const Scalar& s, const ParameterLattice& source, const std::map<std::string, Rational>& values,
                  const ParameterLattice& target) {
  require_same_lattice(s.nvars(), source.size());
  std::vector<std::optional<std::size_t>> to_target(source.size());
  std::vector<const Rational*> value_of(source.size(), nullptr);
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (auto it = values.find(source.symbol(i)); it != values.end()) {
      value_of[i] = &it->second;
    } else {
      to_target[i] = target.index_of(source.symbol(i));
      if (!to_target[i]) {
        throw LatticeMismatch("symbol '" + source.symbol(i) + "' is neither substituted nor kept");
      }
    }
  }
  auto map_poly = [&](const LaurentPoly& p) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : p.terms()) {
      Exponents e(target.size(), 0);
      Rational c = t.coeff;
      for (std::size_t i = 0; i < source.size(); ++i) {
        if (value_of[i]) {
          c *= rational_pow(*value_of[i], t.exponents[i]);
        } else {
          e[*to_target[i]] += t.exponents[i];
        }
      }
      terms.push_back({std::move(e), std::move(c)});
    }
    return LaurentPoly(target.size(), std::move(terms));
  };
  LaurentPoly den = map_poly(s.den());
  if (den.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
  return Scalar(map_poly(s.num()), std::move(den));
}

}  // namespace qalg
