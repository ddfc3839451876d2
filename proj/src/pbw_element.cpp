#include "qalg/pbw_element.hpp"

#include <numeric>
#include <stdexcept>

namespace qalg {

std::string gen_name(int g) { return (gen_is_x(g) ? "x" : "y") + std::to_string(gen_index(g)); }

int degree(const PBWMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

PBWElement PBWElement::monomial(int n, PBWMonomial m, Scalar coeff) {
  if (static_cast<int>(m.size()) != 2 * n) throw std::invalid_argument("PBW monomial has wrong length");
  PBWElement out(n, coeff.nvars());
  out.add_term(m, coeff);
  return out;
}

PBWElement PBWElement::one(int n, std::size_t nvars) {
  return monomial(n, PBWMonomial(2 * n, 0), Scalar::one(nvars));
}

PBWElement PBWElement::generator(int n, std::size_t nvars, int g) {
  if (g < 0 || g >= 2 * n) throw std::out_of_range("generator position out of range");
  PBWMonomial m(2 * n, 0);
  m[g] = 1;
  return monomial(n, std::move(m), Scalar::one(nvars));
}

int PBWElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

void PBWElement::add_term(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.nvars() != nvars_) throw LatticeMismatch("coefficient lives over a different parameter lattice");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PBWElement::require_compatible(const PBWElement& rhs) const {
  if (n_ != rhs.n_ || nvars_ != rhs.nvars_) throw std::invalid_argument("PBW elements of different algebras");
}

PBWElement& PBWElement::operator+=(const PBWElement& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

PBWElement operator*(const Scalar& c, const PBWElement& f) {
  PBWElement out(f.n_, f.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, a] : f.terms_) out.terms_.emplace(m, c * a);
  return out;
}

bool operator==(const PBWElement& a, const PBWElement& b) { return (a - b).is_zero(); }

std::string format_pbw_monomial(const PBWMonomial& m) {
  std::string out;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += ' ';
    out += gen_name(static_cast<int>(g));
    if (m[g] != 1) out += "^" + std::to_string(m[g]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const PBWElement& f, const ParameterLattice& lattice) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c, lattice) + "·" + format_pbw_monomial(m);
  }
  return out;
}

}  // namespace qalg
