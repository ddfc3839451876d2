#include "qalg/torus.hpp"

#include <stdexcept>

namespace qalg {

namespace {

void require_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("torus rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string basis_name(int n, int idx, const LocalizationChoice* choice) {
  if (idx < n) return "z" + std::to_string(idx + 1);
  const int i = idx - n;
  const bool x = choice && choice->use_x.at(i);
  return (x ? "x" : "y") + std::to_string(i + 1);
}

std::string entry_text(const Scalar& s, const ParameterLattice& lattice) {
  if (auto e = scalar_as_monomial(s)) return format_monomial(*e, lattice);
  if (auto sm = scalar_as_scaled_monomial(s)) {
    const std::string mono = format_monomial(sm->second, lattice);
    return to_string(sm->first) + (mono == "1" ? "" : "*" + mono);
  }
  throw std::invalid_argument("commutation entry is not a monomial: " + to_string(s, lattice));
}

}  // namespace

bool CommutationMatrix::is_antisymmetric() const {
  const Scalar unit = Scalar::one(nvars());
  for (int i = 0; i < m; ++i) {
    if (!((*this)(i, i) == unit)) return false;
    for (int j = i + 1; j < m; ++j) {
      if (!((*this)(i, j) * (*this)(j, i) == unit)) return false;
    }
  }
  return true;
}

bool CommutationMatrix::operator==(const CommutationMatrix& rhs) const {
  if (m != rhs.m || !(lattice == rhs.lattice)) return false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!((*this)(i, j) == rhs(i, j))) return false;
  return true;
}

CommutationMatrix trivial_commutation(int m, const ParameterLattice& lattice) {
  CommutationMatrix M;
  M.m = m;
  M.lattice = lattice;
  M.entries.assign(m, std::vector<Scalar>(m, Scalar::one(lattice.size())));
  return M;
}

nlohmann::json to_json(const CommutationMatrix& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : M.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(entry_text(e, M.lattice));
    rows.push_back(std::move(r));
  }
  return {{"m", M.m}, {"entries", std::move(rows)}};
}

CommutationMatrix commutation_from_json(const nlohmann::json& j, const ParameterLattice& lattice) {
  CommutationMatrix M;
  M.m = j.at("m").get<int>();
  M.lattice = lattice;
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != M.m) throw ConfigError("entries", "expected m rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != M.m) throw ConfigError("entries", "expected m columns");
    std::vector<Scalar> r;
    for (const auto& e : row) r.push_back(parse_monomial(e.get<std::string>(), lattice));
    M.entries.push_back(std::move(r));
  }
  return M;
}

// ---------------------------------------------------------------------------

TorusElement TorusElement::monomial(TorusExponent u, const Scalar& c) {
  TorusElement f(static_cast<int>(u.size()), c.nvars());
  f.add_term(u, c);
  return f;
}

TorusElement TorusElement::one(int m, std::size_t nvars) {
  return monomial(TorusExponent(m, 0), Scalar::one(nvars));
}

TorusElement TorusElement::generator(int m, std::size_t nvars, int i, int power) {
  TorusExponent u(m, 0);
  u.at(i) = power;
  return monomial(std::move(u), Scalar::one(nvars));
}

void TorusElement::add_term(const TorusExponent& u, const Scalar& c) {
  require_rank(m_, static_cast<int>(u.size()));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
  require_rank(m_, rhs.m_);
  for (const auto& [u, c] : rhs.terms_) add_term(u, c);
  return *this;
}

TorusElement operator-(TorusElement a, const TorusElement& b) {
  require_rank(a.m_, b.m_);
  for (const auto& [u, c] : b.terms_) a.add_term(u, -c);
  return a;
}

TorusElement operator*(const Scalar& c, const TorusElement& f) {
  TorusElement out(f.m_, f.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [u, a] : f.terms_) out.terms_.emplace(u, c * a);
  return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) { return (a - b).is_zero(); }

std::string to_string(const TorusElement& f, const ParameterLattice& lattice) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [u, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c, lattice) + "·X^(";
    for (std::size_t i = 0; i < u.size(); ++i) out += (i ? "," : "") + std::to_string(u[i]);
    out += ")";
  }
  return out;
}

Scalar cocycle(const CommutationMatrix& M, const TorusExponent& u, const TorusExponent& v) {
  require_rank(M.m, static_cast<int>(u.size()));
  require_rank(M.m, static_cast<int>(v.size()));
  Scalar c = Scalar::one(M.nvars());
  for (int i = 0; i < M.m; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < i; ++j) {
      if (v[j] != 0) c *= M(i, j).pow(static_cast<long>(u[i]) * v[j]);
    }
  }
  return c;
}

Scalar bicharacter(const CommutationMatrix& M, const TorusExponent& u, const TorusExponent& v) {
  return cocycle(M, u, v) / cocycle(M, v, u);
}

TorusElement t_mul(const CommutationMatrix& M, const TorusElement& a, const TorusElement& b) {
  require_rank(M.m, a.rank());
  require_rank(M.m, b.rank());
  TorusElement out(M.m, M.nvars());
  for (const auto& [u, ca] : a.terms()) {
    for (const auto& [v, cb] : b.terms()) {
      TorusExponent w(M.m);
      for (int i = 0; i < M.m; ++i) w[i] = u[i] + v[i];
      out.add_term(w, ca * cb * cocycle(M, u, v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LocalizationChoice LocalizationChoice::from_mask(int n, unsigned mask) {
  LocalizationChoice c;
  for (int i = 0; i < n; ++i) c.use_x.push_back(((mask >> i) & 1u) != 0);
  return c;
}

std::string LocalizationChoice::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < use_x.size(); ++i) {
    if (i) out += ' ';
    out += (use_x[i] ? "x" : "y") + std::to_string(i + 1);
  }
  return out;
}

CommutationMatrix cn_matrix(const AlgebraSpec& spec) {
  const int n = spec.n;
  CommutationMatrix M = trivial_commutation(2 * n, spec.lattice);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Scalar& l = i >= j ? spec.qi(j) : spec.pi(j);
      M.entries[i - 1][n + j - 1] = l;
      M.entries[n + j - 1][i - 1] = l.inverse();
      M.entries[n + i - 1][n + j - 1] = spec.g(i, j);
    }
  }
  return M;
}

CommutationMatrix sn_matrix(const AlgebraSpec& spec, const LocalizationChoice& choice) {
  const int n = spec.n;
  if (static_cast<int>(choice.use_x.size()) != n) throw std::invalid_argument("localization choice has wrong length");
  CommutationMatrix M = trivial_commutation(2 * n, spec.lattice);
  auto set = [&](int a, int b, const Scalar& l) {
    M.entries[a][b] = l;
    M.entries[b][a] = l.inverse();
  };
  // z_i y_j = q_j y_j z_i (i >= j), p_j y_j z_i (i < j); z_i x_j with inverses
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Scalar& l = i < j ? spec.pi(j) : spec.qi(j);
      set(i - 1, n + j - 1, choice.use_x[j - 1] ? l.inverse() : l);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool xi = choice.use_x[i - 1], xj = choice.use_x[j - 1];
      Scalar l;
      if (xi && xj) {
        l = spec.qi(i) * spec.pi(j).inverse() * spec.g(i, j);  // x_i x_j
      } else if (!xi && !xj) {
        l = spec.g(i, j);  // y_i y_j
      } else if (xi) {
        l = spec.pi(j) * spec.g(i, j).inverse();  // x_i y_j, i < j
      } else {
        l = (spec.qi(i) * spec.g(j, i).inverse()).inverse();  // from x_j y_i, j > i
      }
      set(n + i - 1, n + j - 1, l);
    }
  }
  return M;
}

CommutationMatrix quantum_weyl_cn_matrix(const AlgebraSpec& spec) {
  const int n = spec.n;
  CommutationMatrix M = trivial_commutation(2 * n, spec.lattice);
  // z_j y_i = y_i z_j for j < i, q_i y_i z_j for j >= i; y_i y_j = lambda_ij y_j y_i
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (j >= i) {
        M.entries[j - 1][n + i - 1] = spec.qi(i);
        M.entries[n + i - 1][j - 1] = spec.qi(i).inverse();
      }
      M.entries[n + i - 1][n + j - 1] = spec.g(i, j);
    }
  }
  return M;
}

CheckReport theta_check(const AlgebraSpec& spec, const LocalizationChoice& choice) {
  const int n = spec.n;
  const int m = 2 * n;
  const std::size_t k = spec.nvars();
  const CommutationMatrix C = cn_matrix(spec);
  const CommutationMatrix S = sn_matrix(spec, choice);
  const std::string tag = "theta[" + choice.to_string() + "] ";
  CheckReport report;

  report.add(tag + "Lambda(S_n) antisymmetric", S.is_antisymmetric());

  std::vector<TorusElement> image;
  for (int i = 0; i < n; ++i) image.push_back(TorusElement::generator(m, k, i));
  for (int i = 0; i < n; ++i) {
    if (choice.use_x[i]) {
      // right inverse placement: z_i * x_i^-1
      image.push_back(t_mul(S, TorusElement::generator(m, k, i), TorusElement::generator(m, k, n + i, -1)));
    } else {
      image.push_back(TorusElement::generator(m, k, n + i));
    }
  }

  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const TorusElement lhs = t_mul(S, image[a], image[b]);
      const TorusElement rhs = C(a, b) * t_mul(S, image[b], image[a]);
      const TorusElement residue = lhs - rhs;
      report.add(tag + basis_name(n, a, nullptr) + " " + basis_name(n, b, nullptr) + " = lambda " +
                     basis_name(n, b, nullptr) + " " + basis_name(n, a, nullptr),
                 residue.is_zero(), residue.is_zero() ? "" : "residue " + to_string(residue, spec.lattice));
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!choice.use_x[i]) continue;
    // (z_i x_i^-1)(x_i z_i^-1) = 1
    const TorusElement inv =
        t_mul(S, TorusElement::generator(m, k, n + i), TorusElement::generator(m, k, i, -1));
    report.add(tag + "theta(y" + std::to_string(i + 1) + ") is a unit",
               t_mul(S, image[n + i], inv) == TorusElement::one(m, k) &&
                   t_mul(S, inv, image[n + i]) == TorusElement::one(m, k));
  }
  return report;
}

}  // namespace qalg
