#include "qalg/pbw.hpp"

#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

namespace qalg {

namespace {

Word expand_monomial(const PBWMonomial& m) {
  Word w;
  for (std::size_t g = 0; g < m.size(); ++g) w.insert(w.end(), m[g], static_cast<int>(g));
  return w;
}

std::string sub(int i) { return std::to_string(i); }

void check_identity(CheckReport& report, std::string name, const PBWElement& lhs, const PBWElement& rhs,
                    const ParameterLattice& lattice) {
  const PBWElement residue = lhs - rhs;
  if (residue.is_zero()) {
    report.add(std::move(name), true);
  } else {
    report.add(std::move(name), false, "residue " + to_string(residue, lattice));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Words

Word parse_word(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word w;
  while (in >> token) {
    if (token == "1") continue;
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) {
      throw std::invalid_argument("bad generator '" + token + "' (expected x<i> or y<i>)");
    }
    const auto caret = token.find('^');
    const std::string index_text = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int power = 1;
    try {
      std::size_t used = 0;
      const int i = std::stoi(index_text, &used);
      if (used != index_text.size() || i < 1 || i > n) throw std::invalid_argument("");
      if (caret != std::string::npos) {
        const std::string ptext = token.substr(caret + 1);
        power = std::stoi(ptext, &used);
        if (used != ptext.size() || power < 0) throw std::invalid_argument("");
      }
      w.insert(w.end(), power, token[0] == 'x' ? gen_x(i) : gen_y(i));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator '" + token + "' for rank " + std::to_string(n));
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int g : w) {
    if (!out.empty()) out += ' ';
    out += gen_name(g);
  }
  return out;
}

PBWElement normal_form(const AlgebraSpec& spec, const Word& w) {
  const int n = spec.n;
  const std::size_t k = spec.nvars();
  std::map<std::pair<int, int>, PBWElement> rules;
  for (auto& r : rewrite_rules(spec)) rules.emplace(std::make_pair(r.left, r.right), std::move(r.result));

  PBWElement out(n, k);
  std::map<Word, Scalar> pending;
  pending.emplace(w, Scalar::one(k));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& word = node.key();
    const Scalar& c = node.mapped();
    std::size_t pos = 0;
    while (pos + 1 < word.size() && word[pos] <= word[pos + 1]) ++pos;
    if (pos + 1 >= word.size()) {
      PBWMonomial m(2 * n, 0);
      for (int g : word) ++m[g];
      out.add_term(m, c);
      continue;
    }
    const auto& result = rules.at({word[pos], word[pos + 1]});
    for (const auto& [mono, coef] : result.terms()) {
      Word next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
      const Word middle = expand_monomial(mono);
      next.insert(next.end(), middle.begin(), middle.end());
      next.insert(next.end(), word.begin() + static_cast<std::ptrdiff_t>(pos) + 2, word.end());
      const Scalar term = c * coef;
      auto [it, inserted] = pending.try_emplace(std::move(next), term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PbwAlgebra

PbwAlgebra::PbwAlgebra(AlgebraSpec spec) : spec_(std::move(spec)) {
  const int gens = 2 * spec_.n;
  swap_.assign(gens, std::vector<Scalar>(gens, Scalar::zero(nvars())));
  extra_.assign(spec_.n + 1, zero());
  for (const auto& rule : rewrite_rules(spec_)) {
    PBWMonomial swapped(gens, 0);
    swapped[rule.left] += 1;
    swapped[rule.right] += 1;
    PBWElement rest = rule.result;
    const auto it = rule.result.terms().find(swapped);
    if (it == rule.result.terms().end()) throw std::logic_error("rewrite rule without a swapped term");
    swap_[rule.left][rule.right] = it->second;
    rest.add_term(swapped, -it->second);
    if (!rest.is_zero()) {
      if (!gen_is_x(rule.left) || gen_is_x(rule.right) || gen_index(rule.left) != gen_index(rule.right)) {
        throw std::logic_error("inhomogeneous rewrite rule on an unexpected pair");
      }
      extra_[gen_index(rule.left)] = std::move(rest);
    }
  }
}

const PBWElement& PbwAlgebra::monomial_times_generator(const PBWMonomial& m, int g) {
  auto key = std::make_pair(m, g);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  int top = -1;
  for (int h = static_cast<int>(m.size()) - 1; h >= 0; --h) {
    if (m[h] > 0) {
      top = h;
      break;
    }
  }
  PBWElement result = zero();
  if (top <= g) {
    PBWMonomial out = m;
    ++out[g];
    result.add_term(out, Scalar::one(nvars()));
  } else {
    // m = m' * top, and top * g = c * g * top + extra
    PBWMonomial rest = m;
    --rest[top];
    const Scalar c = swap_[top][g];
    const PBWElement& moved = monomial_times_generator(rest, g);
    for (const auto& [t, a] : moved.terms()) result += (a * c) * monomial_times_generator(t, top);
    if (gen_is_x(top) && !gen_is_x(g) && gen_index(top) == gen_index(g)) {
      for (const auto& [e, eps] : extra_[gen_index(top)].terms()) {
        PBWElement partial = PBWElement::monomial(spec_.n, rest, eps);
        for (int h : expand_monomial(e)) partial = times_generator(partial, h);
        result += partial;
      }
    }
  }
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

PBWElement PbwAlgebra::times_generator(const PBWElement& f, int g) {
  PBWElement out = zero();
  for (const auto& [m, c] : f.terms()) out += c * monomial_times_generator(m, g);
  return out;
}

PBWElement PbwAlgebra::multiply(const PBWElement& f, const PBWElement& g) {
  if (f.rank() != spec_.n || g.rank() != spec_.n || f.nvars() != nvars() || g.nvars() != nvars()) {
    throw std::invalid_argument("multiply: operands belong to a different algebra");
  }
  PBWElement out = zero();
  for (const auto& [m, c] : g.terms()) {
    PBWElement partial = f;
    for (int h : expand_monomial(m)) partial = times_generator(partial, h);
    out += c * partial;
  }
  return out;
}

PBWElement PbwAlgebra::word(const Word& w) {
  PBWElement out = one();
  for (int g : w) out = times_generator(out, g);
  return out;
}

PBWElement PbwAlgebra::power(const PBWElement& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power of a PBW element");
  PBWElement out = one();
  for (int i = 0; i < k; ++i) out = multiply(out, f);
  return out;
}

PBWElement PbwAlgebra::product(std::initializer_list<PBWElement> factors) {
  PBWElement out = one();
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

PBWElement multiply(const AlgebraSpec& spec, const PBWElement& f, const PBWElement& g) {
  PbwAlgebra algebra(spec);
  return algebra.multiply(f, g);
}

// ---------------------------------------------------------------------------
// Verifiers

CheckReport verify_relations(const AlgebraSpec& spec) {
  PbwAlgebra A(spec);
  CheckReport report;
  const auto& L = spec.lattice;
  const int n = spec.n;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      check_identity(report, "x" + sub(i) + " x" + sub(j) + " = q" + sub(i) + " p" + sub(j) + "^-1 g" + sub(i) + sub(j) + " x" + sub(j) + " x" + sub(i),
                     A.multiply(A.x(i), A.x(j)),
                     (spec.qi(i) * spec.pi(j).inverse() * spec.g(i, j)) * A.multiply(A.x(j), A.x(i)), L);
      check_identity(report, "y" + sub(i) + " y" + sub(j) + " = g" + sub(i) + sub(j) + " y" + sub(j) + " y" + sub(i),
                     A.multiply(A.y(i), A.y(j)), spec.g(i, j) * A.multiply(A.y(j), A.y(i)), L);
      check_identity(report, "x" + sub(i) + " y" + sub(j) + " = p" + sub(j) + " g" + sub(i) + sub(j) + "^-1 y" + sub(j) + " x" + sub(i),
                     A.multiply(A.x(i), A.y(j)),
                     (spec.pi(j) * spec.g(i, j).inverse()) * A.multiply(A.y(j), A.x(i)), L);
      check_identity(report, "x" + sub(j) + " y" + sub(i) + " = q" + sub(i) + " g" + sub(j) + sub(i) + "^-1 y" + sub(i) + " x" + sub(j),
                     A.multiply(A.x(j), A.y(i)),
                     (spec.qi(i) * spec.g(j, i).inverse()) * A.multiply(A.y(i), A.x(j)), L);
    }
  }
  for (int i = 1; i <= n; ++i) {
    PBWElement rhs = A.zero();
    for (int l = 1; l < i; ++l) rhs += (spec.qi(l) - spec.pi(l)) * A.multiply(A.y(l), A.x(l));
    check_identity(report, "x" + sub(i) + " y" + sub(i) + " - q" + sub(i) + " y" + sub(i) + " x" + sub(i) + " = sum_{l<" + sub(i) + "} (q_l - p_l) y_l x_l",
                   A.multiply(A.x(i), A.y(i)) - spec.qi(i) * A.multiply(A.y(i), A.x(i)), rhs, L);
  }
  return report;
}

CheckReport verify_normality(const AlgebraSpec& spec, int i) {
  if (i < 1 || i > spec.n) throw std::out_of_range("normality index " + std::to_string(i) + " out of range");
  PbwAlgebra A(spec);
  CheckReport report;
  const auto& L = spec.lattice;
  const PBWElement zi = A.z(i);
  for (int j = 1; j <= spec.n; ++j) {
    const bool below = i < j;
    const Scalar ymul = below ? spec.pi(j) : spec.qi(j);
    const Scalar xmul = (below ? spec.pi(j) : spec.qi(j)).inverse();
    const std::string s = below ? "p" : "q";
    check_identity(report, "z" + sub(i) + " y" + sub(j) + " = " + s + sub(j) + " y" + sub(j) + " z" + sub(i),
                   A.multiply(zi, A.y(j)), ymul * A.multiply(A.y(j), zi), L);
    check_identity(report, "z" + sub(i) + " x" + sub(j) + " = " + s + sub(j) + "^-1 x" + sub(j) + " z" + sub(i),
                   A.multiply(zi, A.x(j)), xmul * A.multiply(A.x(j), zi), L);
    const PBWElement zj = A.z(j);
    check_identity(report, "z" + sub(i) + " z" + sub(j) + " = z" + sub(j) + " z" + sub(i), A.multiply(zi, zj),
                   A.multiply(zj, zi), L);
  }
  check_identity(report, "x" + sub(i) + " y" + sub(i) + " - p" + sub(i) + " y" + sub(i) + " x" + sub(i) + " = z" + sub(i),
                 A.multiply(A.x(i), A.y(i)) - spec.pi(i) * A.multiply(A.y(i), A.x(i)), zi, L);
  return report;
}

CheckReport verify_ambiskew(const AlgebraSpec& spec, int m) {
  const AmbiskewStep step = ambiskew_step(spec, m);
  PbwAlgebra A(spec);
  CheckReport report;
  const auto& L = spec.lattice;
  const int t = m + 1;
  const std::string ms = sub(m);
  const std::string prefix = "ambiskew[" + ms + "] ";

  const PBWElement alpha_u = apply_diagonal(step.u, step.alpha_x, step.alpha_y);
  check_identity(report, prefix + "alpha(u) = p" + sub(t) + " u", alpha_u, spec.pi(t) * step.u, L);

  for (int i = 1; i <= m; ++i) {
    const std::size_t k = static_cast<std::size_t>(i - 1);
    const bool bx = step.beta_x[k] == spec.pi(t).inverse() * spec.g(i, t);
    const bool by = step.beta_y[k] == spec.g(t, i);
    report.add(prefix + "beta(x" + sub(i) + ") = p" + sub(t) + "^-1 g" + sub(i) + sub(t) + " x" + sub(i), bx);
    report.add(prefix + "beta(y" + sub(i) + ") = g" + sub(t) + sub(i) + " y" + sub(i), by);

    const PBWElement xi = A.x(i), yi = A.y(i);
    check_identity(report, prefix + "u x" + sub(i) + " = gamma(x" + sub(i) + ") u", A.multiply(step.u, xi),
                   step.gamma_x[k] * A.multiply(xi, step.u), L);
    check_identity(report, prefix + "u y" + sub(i) + " = gamma(y" + sub(i) + ") u", A.multiply(step.u, yi),
                   step.gamma_y[k] * A.multiply(yi, step.u), L);
    check_identity(report, prefix + "x" + sub(t) + " x" + sub(i) + " = alpha(x" + sub(i) + ") x" + sub(t),
                   A.multiply(A.x(t), xi), step.alpha_x[k] * A.multiply(xi, A.x(t)), L);
    check_identity(report, prefix + "x" + sub(t) + " y" + sub(i) + " = alpha(y" + sub(i) + ") x" + sub(t),
                   A.multiply(A.x(t), yi), step.alpha_y[k] * A.multiply(yi, A.x(t)), L);
    check_identity(report, prefix + "y" + sub(t) + " x" + sub(i) + " = beta(x" + sub(i) + ") y" + sub(t),
                   A.multiply(A.y(t), xi), step.beta_x[k] * A.multiply(xi, A.y(t)), L);
    check_identity(report, prefix + "y" + sub(t) + " y" + sub(i) + " = beta(y" + sub(i) + ") y" + sub(t),
                   A.multiply(A.y(t), yi), step.beta_y[k] * A.multiply(yi, A.y(t)), L);
  }

  // alpha is an algebra map on K_m: it rescales every product g h by
  // alpha(g) alpha(h), including the inhomogeneous x_i y_i terms
  bool alpha_ok = true;
  std::string alpha_detail;
  for (int a = 0; a < 2 * m && alpha_ok; ++a) {
    for (int b = 0; b < 2 * m; ++b) {
      const PBWElement prod = A.multiply(A.gen(a), A.gen(b));
      const auto& ta = gen_is_x(a) ? step.alpha_x : step.alpha_y;
      const auto& tb = gen_is_x(b) ? step.alpha_x : step.alpha_y;
      const Scalar weight = ta[gen_index(a) - 1] * tb[gen_index(b) - 1];
      if (!(apply_diagonal(prod, step.alpha_x, step.alpha_y) == weight * prod)) {
        alpha_ok = false;
        alpha_detail = "fails on " + gen_name(a) + " " + gen_name(b);
        break;
      }
    }
  }
  report.add(prefix + "alpha is an automorphism of K_" + ms, alpha_ok, alpha_detail);

  const PBWElement yx = A.multiply(A.y(t), A.x(t));
  const PBWElement xy = A.multiply(A.x(t), A.y(t));
  const PBWElement delta = step.u - step.rho * alpha_u;
  check_identity(report, prefix + "y x - rho x y = u - rho alpha(u)", yx - step.rho * xy, delta, L);
  check_identity(report, prefix + "u - rho alpha(u) = -q" + sub(t) + "^-1 z" + ms, delta,
                 (-spec.qi(t).inverse()) * A.z(m), L);

  const PBWElement z = yx - step.u;
  check_identity(report, prefix + "z x = rho x z", A.multiply(z, A.x(t)), step.rho * A.multiply(A.x(t), z), L);
  check_identity(report, prefix + "z y = rho^-1 y z", A.multiply(z, A.y(t)),
                 step.rho.inverse() * A.multiply(A.y(t), z), L);
  check_identity(report, prefix + "z" + sub(t) + " = (q" + sub(t) + " - p" + sub(t) + ")(y x - u)", A.z(t),
                 (spec.qi(t) - spec.pi(t)) * z, L);
  return report;
}

// ---------------------------------------------------------------------------
// Skew commutator formulae

SkewForm parse_skew_form(std::string_view name) {
  if (name == "xk_y") return SkewForm::xk_y;
  if (name == "x_yk") return SkewForm::x_yk;
  if (name == "k1_base") return SkewForm::k1_base;
  throw std::invalid_argument("unknown skew form '" + std::string(name) + "' (xk_y, x_yk, k1_base)");
}

std::string to_string(SkewForm form) {
  switch (form) {
    case SkewForm::xk_y: return "xk_y";
    case SkewForm::x_yk: return "x_yk";
    case SkewForm::k1_base: return "k1_base";
  }
  return "unknown";
}

Scalar skew_coefficient(const AlgebraSpec& spec, int i, int k) {
  return (spec.qi(i).pow(k) - spec.pi(i).pow(k)) / (spec.qi(i) - spec.pi(i));
}

CheckReport skew_power_identity(const AlgebraSpec& spec, int i, int k, SkewForm form) {
  if (i < 1 || i > spec.n) throw std::invalid_argument("skew identity index " + std::to_string(i) + " out of range");
  if (k < 1) throw std::invalid_argument("skew identity power must be >= 1");
  if (form == SkewForm::k1_base && i != 1) throw std::invalid_argument("form k1_base applies to i = 1 only");
  if (form != SkewForm::k1_base && i < 2) throw std::invalid_argument("forms xk_y and x_yk need i >= 2");

  PbwAlgebra A(spec);
  CheckReport report;
  const auto& L = spec.lattice;
  const PBWElement xi = A.x(i), yi = A.y(i);
  const Scalar qk = spec.qi(i).pow(k);
  const std::string tag = "skew[" + to_string(form) + "] i=" + sub(i) + " k=" + sub(k) + ": ";

  switch (form) {
    case SkewForm::k1_base: {
      check_identity(report, tag + "x1 y1^k = q1^k y1^k x1", A.multiply(xi, A.power(yi, k)),
                     qk * A.multiply(A.power(yi, k), xi), L);
      check_identity(report, tag + "x1^k y1 = q1^k y1 x1^k", A.multiply(A.power(xi, k), yi),
                     qk * A.multiply(yi, A.power(xi, k)), L);
      break;
    }
    case SkewForm::xk_y: {
      const PBWElement rhs = qk * A.multiply(yi, A.power(xi, k)) +
                             skew_coefficient(spec, i, k) * A.multiply(A.z(i - 1), A.power(xi, k - 1));
      check_identity(report, tag + "x^k y = q^k y x^k + [k] z_{i-1} x^{k-1}", A.multiply(A.power(xi, k), yi), rhs, L);
      break;
    }
    case SkewForm::x_yk: {
      const PBWElement rhs = qk * A.multiply(A.power(yi, k), xi) +
                             skew_coefficient(spec, i, k) * A.multiply(A.power(yi, k - 1), A.z(i - 1));
      check_identity(report, tag + "x y^k = q^k y^k x + [k] y^{k-1} z_{i-1}", A.multiply(xi, A.power(yi, k)), rhs, L);
      break;
    }
  }
  return report;
}

FuzzResult associativity_fuzz(const AlgebraSpec& spec, std::size_t trials, int max_length, std::uint64_t seed) {
  PbwAlgebra A(spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> letter(0, 2 * spec.n - 1);
  auto random_word = [&] {
    Word w(length(rng));
    for (auto& g : w) g = letter(rng);
    return w;
  };
  FuzzResult result;
  result.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    const Word a = random_word(), b = random_word(), c = random_word();
    const PBWElement f = A.word(a), g = A.word(b), h = A.word(c);
    const PBWElement left = A.multiply(A.multiply(f, g), h);
    const PBWElement right = A.multiply(f, A.multiply(g, h));
    Word all = a;
    all.insert(all.end(), b.begin(), b.end());
    all.insert(all.end(), c.begin(), c.end());
    ++result.trials;
    if (!(left == right) || !(left == normal_form(spec, all))) {
      if (result.failures++ == 0) {
        result.first_failure = "(" + format_word(a) + ") (" + format_word(b) + ") (" + format_word(c) + ")";
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Growth

double fit_growth_exponent(const std::vector<std::size_t>& counts, int generators, int first, int last) {
  if (first < 0 || last >= static_cast<int>(counts.size()) || last - first < 1) {
    throw std::invalid_argument("growth fit needs at least two lengths");
  }
  const double shift = (generators + 1) / 2.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int points = last - first + 1;
  for (int m = first; m <= last; ++m) {
    const double x = std::log(m + shift);
    const double y = std::log(static_cast<double>(counts[m]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (points * sxy - sx * sy) / (points * sxx - sx * sx);
}

GrowthResult growth_count(const AlgebraSpec& spec, int max_length, const GrowthBudget& budget) {
  if (max_length < 0) throw std::invalid_argument("growth length must be non-negative");
  const int gens = 2 * spec.n;
  // total number of words of length <= max_length
  double total = 0;
  double layer = 1;
  for (int m = 0; m <= max_length; ++m) {
    total += layer;
    layer *= gens;
  }
  if (total > static_cast<double>(budget.max_words)) {
    throw BudgetExceeded("growth enumeration needs " + std::to_string(static_cast<long long>(total)) +
                         " words, budget is " + std::to_string(budget.max_words));
  }

  PbwAlgebra A(spec);
  const Scalar unit = Scalar::one(spec.nvars());
  std::map<PBWMonomial, int> first_support;  // shortest word whose normal form uses the monomial
  std::map<PBWMonomial, int> first_exact;    // shortest word whose normal form is exactly the monomial
  std::size_t visited = 0;

  auto record = [&](const PBWElement& f, int len) {
    for (const auto& [m, c] : f.terms()) {
      auto [it, inserted] = first_support.try_emplace(m, len);
      if (!inserted) it->second = std::min(it->second, len);
    }
    if (f.terms().size() == 1 && f.terms().begin()->second == unit) {
      auto [it, inserted] = first_exact.try_emplace(f.terms().begin()->first, len);
      if (!inserted) it->second = std::min(it->second, len);
    }
  };

  auto visit = [&](auto& self, const PBWElement& f, int len) -> void {
    if (++visited % 1024 == 0 && budget.deadline && std::chrono::steady_clock::now() > *budget.deadline) {
      throw BudgetExceeded("growth enumeration exceeded its time budget");
    }
    record(f, len);
    if (len == max_length) return;
    for (int g = 0; g < gens; ++g) self(self, A.times_generator(f, g), len + 1);
  };
  visit(visit, A.one(), 0);

  // The span of words of length <= m lies inside the span of the supporting
  // monomials; it equals that span when each such monomial is itself the
  // normal form of a word of length <= m.
  for (const auto& [m, len] : first_support) {
    const auto it = first_exact.find(m);
    if (it == first_exact.end() || it->second > len) {
      throw std::logic_error("span of words not certified at monomial " + format_pbw_monomial(m));
    }
  }

  GrowthResult result;
  result.counts.assign(max_length + 1, 0);
  for (const auto& [m, len] : first_support) {
    for (int l = len; l <= max_length; ++l) ++result.counts[l];
  }
  if (max_length >= 2) {
    result.exponent = fit_growth_exponent(result.counts, gens, std::max(1, max_length - 2), max_length);
  }
  return result;
}

}  // namespace qalg
