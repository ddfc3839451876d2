#include "qalg/presentation.hpp"

#include <algorithm>

namespace qalg {

namespace {

std::string sym_q(int i) { return "q" + std::to_string(i); }
std::string sym_p(int i) { return "p" + std::to_string(i); }
std::string sym_g(int n, int i, int j) {
  return n < 10 ? "g" + std::to_string(i) + std::to_string(j) : "g" + std::to_string(i) + "_" + std::to_string(j);
}

std::string format_scalar_entry(const Scalar& s, const ParameterLattice& lattice) {
  if (auto m = scalar_as_scaled_monomial(s)) {
    const auto mono = format_monomial(m->second, lattice);
    if (m->first == 1) return mono;
    if (mono == "1") return to_string(m->first);
    return to_string(m->first) + "*" + mono;
  }
  return to_string(s, lattice);
}

// Fill gamma from upper-triangle entries, completing antisymmetrically.
std::vector<std::vector<Scalar>> antisymmetric_completion(int n, std::size_t k,
                                                          const std::vector<std::vector<Scalar>>& upper) {
  std::vector<std::vector<Scalar>> gamma(n, std::vector<Scalar>(n, Scalar::one(k)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      gamma[i][j] = upper[i][j];
      gamma[j][i] = upper[i][j].inverse();
    }
  }
  return gamma;
}

}  // namespace

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::generic: return "generic";
    case Kind::generic_p1: return "generic-p1";
    case Kind::generic_q1: return "generic-q1";
    case Kind::symplectic: return "symplectic";
    case Kind::euclidean: return "euclidean";
    case Kind::heisenberg: return "heisenberg";
    case Kind::graded_weyl: return "graded-weyl";
    case Kind::custom: return "custom";
  }
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::generic, Kind::generic_p1, Kind::generic_q1, Kind::symplectic, Kind::euclidean,
                 Kind::heisenberg, Kind::graded_weyl, Kind::custom}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("kind", "unknown algebra kind '" + std::string(name) + "'");
}

bool is_single_parameter(Kind kind) {
  return kind == Kind::symplectic || kind == Kind::euclidean || kind == Kind::heisenberg;
}

// ---------------------------------------------------------------------------

AlgebraSpec build_spec(int n, Kind kind, std::optional<Rational> q) {
  if (n < 1) throw ConfigError("n", "rank must be a positive integer, got " + std::to_string(n));
  if (kind == Kind::custom) throw ConfigError("kind", "custom algebras are built from explicit parameters");
  if (q && !is_single_parameter(kind)) {
    throw ConfigError("q", "a rational q is only accepted by single-parameter presets, not " + to_string(kind));
  }
  if (q && (*q == 0 || *q == 1 || *q == -1)) {
    throw ConfigError("q", "q = " + to_string(*q) + " is zero or a root of unity");
  }

  AlgebraSpec spec;
  spec.n = n;
  spec.kind = kind;

  if (is_single_parameter(kind)) {
    spec.lattice = ParameterLattice({"q"});
    const auto qpow = [](int e) { return Scalar::monomial({e}); };
    int qe = 0, pe = 0, ge = 0;
    switch (kind) {
      case Kind::symplectic: qe = -2, pe = 0, ge = 1; break;
      case Kind::euclidean: qe = 0, pe = -2, ge = -1; break;
      case Kind::heisenberg: qe = 0, pe = 2, ge = 1; break;
      default: break;
    }
    spec.q.assign(n, qpow(qe));
    spec.p.assign(n, qpow(pe));
    std::vector<std::vector<Scalar>> upper(n, std::vector<Scalar>(n, qpow(ge)));
    spec.gamma = antisymmetric_completion(n, 1, upper);
    if (q) spec.specialization["q"] = *q;
    spec.validate();
    return spec;
  }

  const bool has_q = kind != Kind::generic_q1;
  const bool has_p = kind == Kind::generic || kind == Kind::generic_q1;
  std::vector<std::string> names;
  if (has_q) {
    for (int i = 1; i <= n; ++i) names.push_back(sym_q(i));
  }
  if (has_p) {
    for (int i = 1; i <= n; ++i) names.push_back(sym_p(i));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) names.push_back(sym_g(n, i, j));
  }
  spec.lattice = ParameterLattice(std::move(names));
  const std::size_t k = spec.lattice.size();
  auto var = [&](const std::string& name) { return Scalar::variable(k, *spec.lattice.index_of(name)); };

  for (int i = 1; i <= n; ++i) {
    spec.q.push_back(has_q ? var(sym_q(i)) : Scalar::one(k));
    spec.p.push_back(has_p ? var(sym_p(i)) : Scalar::one(k));
  }
  std::vector<std::vector<Scalar>> upper(n, std::vector<Scalar>(n, Scalar::one(k)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) upper[i - 1][j - 1] = var(sym_g(n, i, j));
  }
  spec.gamma = antisymmetric_completion(n, k, upper);
  spec.validate();
  return spec;
}

AlgebraSpec build_custom_spec(int n, const CustomParameters& params) {
  if (n < 1) throw ConfigError("n", "rank must be a positive integer, got " + std::to_string(n));
  AlgebraSpec spec;
  spec.n = n;
  spec.kind = Kind::custom;
  try {
    spec.lattice = ParameterLattice(params.symbols);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("custom.symbols", e.what());
  }
  const std::size_t k = spec.lattice.size();

  auto parse_list = [&](const std::vector<std::string>& src, const char* field) {
    if (static_cast<int>(src.size()) != n) {
      throw ConfigError(std::string("custom.") + field, "expected " + std::to_string(n) + " entries");
    }
    std::vector<Scalar> out;
    for (const auto& s : src) {
      try {
        out.push_back(parse_monomial(s, spec.lattice));
      } catch (const std::exception& e) {
        throw ConfigError(std::string("custom.") + field, e.what());
      }
    }
    return out;
  };
  spec.q = parse_list(params.q, "q");
  spec.p = parse_list(params.p, "p");

  if (params.gamma.empty()) {
    spec.gamma.assign(n, std::vector<Scalar>(n, Scalar::one(k)));
  } else {
    if (static_cast<int>(params.gamma.size()) != n) throw ConfigError("custom.gamma", "expected an n x n matrix");
    for (const auto& row : params.gamma) {
      if (static_cast<int>(row.size()) != n) throw ConfigError("custom.gamma", "expected an n x n matrix");
      std::vector<Scalar> parsed;
      for (const auto& s : row) {
        try {
          parsed.push_back(parse_monomial(s, spec.lattice));
        } catch (const std::exception& e) {
          throw ConfigError("custom.gamma", e.what());
        }
      }
      spec.gamma.push_back(std::move(parsed));
    }
  }
  spec.validate();
  return spec;
}

void AlgebraSpec::validate() const {
  if (n < 1) throw ConfigError("n", "rank must be a positive integer");
  if (static_cast<int>(q.size()) != n || static_cast<int>(p.size()) != n) {
    throw ConfigError("", "parameter vectors must have length n");
  }
  if (static_cast<int>(gamma.size()) != n) throw ConfigError("gamma", "gamma must be n x n");
  const std::size_t k = lattice.size();
  auto check_monomial = [&](const Scalar& s, const std::string& what, const char* field) {
    if (s.nvars() != k) throw ConfigError(field, what + " lives over the wrong parameter lattice");
    if (s.is_zero() || !scalar_as_scaled_monomial(s)) {
      throw ConfigError(field, what + " must be a nonzero monomial");
    }
  };
  for (int i = 1; i <= n; ++i) {
    check_monomial(qi(i), "q" + std::to_string(i), "q");
    check_monomial(pi(i), "p" + std::to_string(i), "p");
    if (is_torsion_monomial(pi(i) / qi(i))) {
      throw ConfigError("p", "p" + std::to_string(i) + " q" + std::to_string(i) +
                                 "^-1 is a root of unity (or p_i = q_i)");
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(gamma[i - 1].size()) != n) throw ConfigError("gamma", "gamma must be n x n");
    for (int j = 1; j <= n; ++j) {
      check_monomial(g(i, j), "gamma" + std::to_string(i) + std::to_string(j), "gamma");
    }
    if (!(g(i, i) == Scalar::one(k))) throw ConfigError("gamma", "diagonal entries of gamma must be 1");
    for (int j = i + 1; j <= n; ++j) {
      if (!(g(i, j) * g(j, i) == Scalar::one(k))) {
        throw ConfigError("gamma", "gamma is not multiplicatively antisymmetric at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
      }
    }
  }
  for (const auto& [name, value] : specialization) {
    if (!lattice.index_of(name)) throw ConfigError("q", "specialized symbol '" + name + "' is not a parameter");
    if (value == 0 || value == 1 || value == -1) {
      throw ConfigError("q", "value " + to_string(value) + " for '" + name + "' is zero or a root of unity");
    }
  }
  if (!specialization.empty()) {
    const AlgebraSpec s = specialized();
    for (int i = 1; i <= n; ++i) {
      if (is_torsion_monomial(s.pi(i) / s.qi(i))) {
        throw ConfigError("q", "specialized p" + std::to_string(i) + " q" + std::to_string(i) +
                                   "^-1 is a root of unity");
      }
    }
  }
}

AlgebraSpec AlgebraSpec::specialized() const {
  if (specialization.empty()) return *this;
  std::vector<std::string> kept;
  for (const auto& s : lattice.symbols()) {
    if (!specialization.contains(s)) kept.push_back(s);
  }
  AlgebraSpec out;
  out.n = n;
  out.kind = kind;
  out.lattice = ParameterLattice(std::move(kept));
  auto sub = [&](const Scalar& s) { return substitute(s, lattice, specialization, out.lattice); };
  for (int i = 0; i < n; ++i) {
    out.q.push_back(sub(q[i]));
    out.p.push_back(sub(p[i]));
  }
  out.gamma.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.gamma[i].push_back(sub(gamma[i][j]));
  }
  return out;
}

// ---------------------------------------------------------------------------

PBWElement casimir(const AlgebraSpec& spec, int i) {
  if (i < 0 || i > spec.n) throw std::out_of_range("casimir index " + std::to_string(i) + " out of range");
  PBWElement z(spec.n, spec.nvars());
  for (int l = 1; l <= i; ++l) {
    PBWMonomial m(2 * spec.n, 0);
    m[gen_y(l)] = 1;
    m[gen_x(l)] = 1;
    z.add_term(m, spec.qi(l) - spec.pi(l));
  }
  return z;
}

std::vector<RewriteRule> rewrite_rules(const AlgebraSpec& spec) {
  const int n = spec.n;
  std::vector<RewriteRule> rules;
  auto swapped = [&](int g, int h, const Scalar& c) {
    // g h -> c h g, h before g
    PBWMonomial m(2 * n, 0);
    m[h] += 1;
    m[g] += 1;
    rules.push_back({g, h, PBWElement::monomial(n, std::move(m), c)});
  };
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      // from x_i x_j = q_i p_j^-1 g_ij x_j x_i
      swapped(gen_x(j), gen_x(i), spec.qi(i).inverse() * spec.pi(j) * spec.g(j, i));
      // from y_i y_j = g_ij y_j y_i
      swapped(gen_y(j), gen_y(i), spec.g(j, i));
      // from x_i y_j = p_j g_ij^-1 y_j x_i, i < j
      swapped(gen_y(j), gen_x(i), spec.pi(j).inverse() * spec.g(i, j));
      // from x_j y_i = q_i g_ji^-1 y_i x_j, j > i
      swapped(gen_x(j), gen_y(i), spec.qi(i) * spec.g(i, j));
    }
    PBWMonomial yx(2 * n, 0);
    yx[gen_y(j)] = 1;
    yx[gen_x(j)] = 1;
    PBWElement result = PBWElement::monomial(n, std::move(yx), spec.qi(j));
    result += casimir(spec, j - 1);
    rules.push_back({gen_x(j), gen_y(j), std::move(result)});
  }
  return rules;
}

AmbiskewStep ambiskew_step(const AlgebraSpec& spec, int m) {
  if (m < 1 || m >= spec.n) {
    throw std::out_of_range("ambiskew step index " + std::to_string(m) + " outside 1.." + std::to_string(spec.n - 1));
  }
  const int next = m + 1;
  AmbiskewStep step;
  step.m = m;
  step.rho = spec.qi(next).inverse();
  step.u = (spec.pi(next) - spec.qi(next)).inverse() * casimir(spec, m);
  for (int i = 1; i <= m; ++i) {
    step.alpha_x.push_back(spec.qi(i).inverse() * spec.pi(next) * spec.g(next, i));
    step.alpha_y.push_back(spec.qi(i) * spec.g(i, next));
    // z_m x_i = q_i^-1 x_i z_m and z_m y_i = q_i y_i z_m for i <= m
    step.gamma_x.push_back(spec.qi(i).inverse());
    step.gamma_y.push_back(spec.qi(i));
    step.beta_x.push_back(step.gamma_x.back() / step.alpha_x.back());
    step.beta_y.push_back(step.gamma_y.back() / step.alpha_y.back());
  }
  return step;
}

PBWElement apply_diagonal(const PBWElement& f, const std::vector<Scalar>& on_x, const std::vector<Scalar>& on_y) {
  PBWElement out(f.rank(), f.nvars());
  for (const auto& [mono, c] : f.terms()) {
    Scalar factor = c;
    for (std::size_t g = 0; g < mono.size(); ++g) {
      if (mono[g] == 0) continue;
      const std::size_t i = static_cast<std::size_t>(gen_index(static_cast<int>(g)) - 1);
      const auto& table = gen_is_x(static_cast<int>(g)) ? on_x : on_y;
      if (i >= table.size()) throw std::invalid_argument("automorphism undefined on " + gen_name(static_cast<int>(g)));
      factor *= table[i].pow(mono[g]);
    }
    out.add_term(mono, factor);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

AlgebraSpec spec_from_json(const nlohmann::json& config) {
  if (!config.is_object()) throw ConfigError("", "config must be a JSON object");
  if (!config.contains("n")) throw ConfigError("n", "missing required field");
  if (!config["n"].is_number_integer()) throw ConfigError("n", "must be an integer");
  const long long n_raw = config["n"].get<long long>();
  if (n_raw < 1 || n_raw > 64) throw ConfigError("n", "rank must be between 1 and 64, got " + std::to_string(n_raw));
  const int n = static_cast<int>(n_raw);

  if (!config.contains("kind")) throw ConfigError("kind", "missing required field");
  if (!config["kind"].is_string()) throw ConfigError("kind", "must be a string");
  const Kind kind = parse_kind(config["kind"].get<std::string>());

  for (const auto& [key, value] : config.items()) {
    if (key != "n" && key != "kind" && key != "q" && key != "custom") {
      throw ConfigError(key, "unknown config field");
    }
  }

  if (kind == Kind::custom) {
    if (!config.contains("custom") || !config["custom"].is_object()) {
      throw ConfigError("custom", "kind 'custom' requires a 'custom' object");
    }
    if (config.contains("q")) throw ConfigError("q", "not accepted for kind 'custom'");
    const auto& c = config["custom"];
    CustomParameters params;
    auto string_list = [&](const char* key, bool required) {
      std::vector<std::string> out;
      const std::string field = std::string("custom.") + key;
      if (!c.contains(key)) {
        if (required) throw ConfigError(field, "missing required field");
        return out;
      }
      if (!c[key].is_array()) throw ConfigError(field, "must be an array of strings");
      for (const auto& v : c[key]) {
        if (!v.is_string()) throw ConfigError(field, "must be an array of strings");
        out.push_back(v.get<std::string>());
      }
      return out;
    };
    params.symbols = string_list("symbols", true);
    params.q = string_list("q", true);
    params.p = string_list("p", true);
    if (c.contains("gamma")) {
      if (!c["gamma"].is_array()) throw ConfigError("custom.gamma", "must be an array of arrays of strings");
      for (const auto& row : c["gamma"]) {
        if (!row.is_array()) throw ConfigError("custom.gamma", "must be an array of arrays of strings");
        std::vector<std::string> r;
        for (const auto& v : row) {
          if (!v.is_string()) throw ConfigError("custom.gamma", "must be an array of arrays of strings");
          r.push_back(v.get<std::string>());
        }
        params.gamma.push_back(std::move(r));
      }
    }
    for (const auto& [key, value] : c.items()) {
      if (key != "symbols" && key != "q" && key != "p" && key != "gamma") {
        throw ConfigError("custom." + key, "unknown field");
      }
    }
    return build_custom_spec(n, params);
  }

  if (config.contains("custom")) throw ConfigError("custom", "only accepted for kind 'custom'");
  std::optional<Rational> q;
  if (config.contains("q") && !config["q"].is_null()) {
    const auto& jq = config["q"];
    try {
      if (jq.is_string()) {
        q = parse_rational(jq.get<std::string>());
      } else if (jq.is_number_integer()) {
        q = Rational(jq.get<long long>());
      } else {
        throw ConfigError("q", "must be a rational string such as \"2\" or \"1/3\"");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("q", e.what());
    }
  }
  return build_spec(n, kind, q);
}

nlohmann::json spec_to_json(const AlgebraSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["kind"] = to_string(spec.kind);
  j["symbols"] = spec.lattice.symbols();
  auto list = [&](const std::vector<Scalar>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : v) arr.push_back(format_scalar_entry(s, spec.lattice));
    return arr;
  };
  j["q"] = list(spec.q);
  j["p"] = list(spec.p);
  j["gamma"] = nlohmann::json::array();
  for (const auto& row : spec.gamma) j["gamma"].push_back(list(row));
  if (!spec.specialization.empty()) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [name, v] : spec.specialization) values[name] = to_string(v);
    j["values"] = values;
  }
  return j;
}

}  // namespace qalg
