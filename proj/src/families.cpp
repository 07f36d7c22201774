#include "lefschetz/families.hpp"

#include <algorithm>
#include <map>

#include "lefschetz/errors.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz::families {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("parameter constraint violated: " + what);
}

void validate_aci3(const Aci3& s) {
  require(s.a > 0 && s.b > 0 && s.c > 0, "a, b, c > 0");
  require(0 <= s.alpha && s.alpha < s.a, "0 <= alpha < a");
  require(0 <= s.beta && s.beta < s.b, "0 <= beta < b");
  require(0 <= s.gamma && s.gamma < s.c, "0 <= gamma < c");
  const int positive = (s.alpha > 0) + (s.beta > 0) + (s.gamma > 0);
  require(positive >= 2, "not a complete intersection (at least two of alpha, beta, gamma positive)");
}

Monomial pure_power(std::size_t r, std::size_t i, int k) { return Monomial::variable(r, i, k); }

// Squarefree monomials of degree d in r variables, canonical order.
std::vector<Monomial> squarefree(std::size_t r, int d) {
  std::vector<Monomial> out;
  for (auto& m : algebra::monomials_of_degree(r, d)) {
    const auto& e = m.exponents();
    if (std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; })) out.push_back(std::move(m));
  }
  return out;
}

std::vector<HomogeneousPolynomial> pure_powers(std::size_t r, int k) {
  std::vector<HomogeneousPolynomial> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(HomogeneousPolynomial::from_monomial(pure_power(r, i, k)));
  return gens;
}

HomogeneousPolynomial jr_extra(int r) {
  const std::size_t n = static_cast<std::size_t>(r);
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = 1;
  const Monomial head(e);
  HomogeneousPolynomial sum(n, 1);
  sum.add_term(Monomial::variable(n, 0), 1);
  sum.add_term(Monomial::variable(n, n - 1), 1);
  return sum * head;
}

std::vector<HomogeneousPolynomial> raw_generators(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const Irkd& s) {
            const std::size_t r = static_cast<std::size_t>(s.r);
            auto gens = pure_powers(r, s.k);
            for (const auto& m : squarefree(r, s.d)) gens.push_back(HomogeneousPolynomial::from_monomial(m));
            return gens;
          },
          [](const Irk& s) { return raw_generators(Irkd{s.r, s.k, s.r}); },
          [](const Irr& s) { return raw_generators(Irkd{s.r, s.r, s.r}); },
          [](const Jr& s) {
            auto gens = pure_powers(static_cast<std::size_t>(s.r), s.r);
            gens.push_back(jr_extra(s.r));
            return gens;
          },
          [](const Aci3& s) {
            std::vector<HomogeneousPolynomial> gens;
            gens.push_back(HomogeneousPolynomial::from_monomial(pure_power(3, 0, s.a)));
            gens.push_back(HomogeneousPolynomial::from_monomial(pure_power(3, 1, s.b)));
            gens.push_back(HomogeneousPolynomial::from_monomial(pure_power(3, 2, s.c)));
            gens.push_back(HomogeneousPolynomial::from_monomial(Monomial({s.alpha, s.beta, s.gamma})));
            return gens;
          },
          [](const LevelAci& s) { return raw_generators(as_aci3(s)); },
          [](const Injn& s) {
            auto gens = pure_powers(4, s.N);
            if (s.variant == InjnVariant::Power) {
              gens.push_back(HomogeneousPolynomial::all_ones(4).pow(s.N));
            } else {
              wlp::FormSampler sampler(s.seed);
              HomogeneousPolynomial g(4, s.N);
              for (const auto& m : algebra::monomials_of_degree(4, s.N)) {
                long c = sampler.uniform(-50, 49);
                if (c >= 0) ++c;
                g.add_term(m, c);
              }
              gens.push_back(g);
            }
            return gens;
          },
      },
      spec);
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(Overloaded{
                 [](const Irkd& s) {
                   require(s.r >= 1, "r >= 1");
                   require(s.k >= 2, "k >= 2");
                   require(2 <= s.d && s.d <= s.r, "2 <= d <= r");
                 },
                 [](const Irk& s) {
                   require(s.r >= 2, "r >= 2");
                   require(s.k >= 2, "k >= 2");
                 },
                 [](const Irr& s) { require(s.r >= 2, "r >= 2"); },
                 [](const Jr& s) { require(s.r >= 2, "r >= 2"); },
                 [](const Aci3& s) { validate_aci3(s); },
                 [](const LevelAci& s) {
                   require(s.t >= 1, "t >= 1");
                   require(1 <= s.alpha && s.alpha <= s.beta && s.beta <= s.gamma,
                           "1 <= alpha <= beta <= gamma");
                 },
                 [](const Injn& s) { require(s.N >= 1, "N >= 1"); },
             },
             spec);
}

std::string describe(const FamilySpec& spec) {
  auto join = [](std::initializer_list<int> v) {
    std::string out;
    for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
  };
  return std::visit(
      Overloaded{
          [&](const Irkd& s) { return "I(" + join({s.r, s.k, s.d}) + ")"; },
          [&](const Irk& s) { return "I(" + join({s.r, s.k}) + ")"; },
          [&](const Irr& s) { return "I(" + join({s.r, s.r}) + ")"; },
          [&](const Jr& s) { return "J(" + join({s.r}) + ")"; },
          [&](const Aci3& s) {
            return "ACI(" + join({s.a, s.b, s.c}) + ";" + join({s.alpha, s.beta, s.gamma}) + ")";
          },
          [&](const LevelAci& s) { return "LevelACI(" + join({s.alpha, s.beta, s.gamma, s.t}) + ")"; },
          [&](const Injn& s) {
            return std::string("INJN(") + std::to_string(s.N) + "," +
                   (s.variant == InjnVariant::Power ? "power" : "general,seed=" + std::to_string(s.seed)) +
                   ")";
          },
      },
      spec);
}

std::size_t num_variables(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const Irkd& s) { return static_cast<std::size_t>(s.r); },
                        [](const Irk& s) { return static_cast<std::size_t>(s.r); },
                        [](const Irr& s) { return static_cast<std::size_t>(s.r); },
                        [](const Jr& s) { return static_cast<std::size_t>(s.r); },
                        [](const Aci3&) { return std::size_t{3}; },
                        [](const LevelAci&) { return std::size_t{3}; },
                        [](const Injn&) { return std::size_t{4}; },
                    },
                    spec);
}

HomogeneousIdeal make_ideal(const FamilySpec& spec, const arith::FieldSpec& field) {
  validate(spec);
  std::vector<HomogeneousPolynomial> gens;
  for (const auto& g : raw_generators(spec)) {
    HomogeneousPolynomial reduced = g.reduced(field);
    if (!reduced.is_zero()) gens.push_back(std::move(reduced));
  }
  return HomogeneousIdeal(num_variables(spec), std::move(gens));
}

Aci3 as_aci3(const LevelAci& s) {
  return Aci3{s.alpha + s.t, s.beta + s.t, s.gamma + s.t, s.alpha, s.beta, s.gamma};
}

Aci3Metadata aci3_metadata(const Aci3& s) {
  validate_aci3(s);
  Aci3Metadata md;
  // (exponents, socle degree, parameter that must be positive)
  const struct {
    std::vector<int> e;
    int degree;
    int parameter;
  } candidates[] = {
      {{s.a - 1, s.b - 1, s.gamma - 1}, s.a + s.b + s.gamma - 3, s.gamma},
      {{s.a - 1, s.beta - 1, s.c - 1}, s.a + s.c + s.beta - 3, s.beta},
      {{s.alpha - 1, s.b - 1, s.c - 1}, s.b + s.c + s.alpha - 3, s.alpha},
  };
  for (const auto& cand : candidates) {
    if (cand.parameter == 0) continue;  // the term with exponent -1 is removed
    md.inverse_system.emplace_back(cand.e);
    md.socle_degrees.push_back(cand.degree);
  }
  md.cm_type = static_cast<int>(md.inverse_system.size());
  md.is_level = std::adjacent_find(md.socle_degrees.begin(), md.socle_degrees.end(),
                                   std::not_equal_to<>()) == md.socle_degrees.end();
  std::vector<HomogeneousPolynomial> residual;
  residual.push_back(HomogeneousPolynomial::from_monomial(pure_power(3, 0, s.a - s.alpha)));
  residual.push_back(HomogeneousPolynomial::from_monomial(pure_power(3, 1, s.b - s.beta)));
  residual.push_back(HomogeneousPolynomial::from_monomial(pure_power(3, 2, s.c - s.gamma)));
  md.residual_ideal = HomogeneousIdeal(3, std::move(residual));
  return md;
}

std::vector<long> alternating_sum_hilbert(const BettiTable& table) {
  const long r = static_cast<long>(table.num_vars);
  int top = 0;
  for (const auto& mod : table.modules) {
    for (const auto& s : mod) top = std::max(top, s.shift);
  }
  std::vector<long> h;
  for (int d = 0; d <= top; ++d) {
    mpz_class value = 0;
    for (std::size_t i = 0; i < table.modules.size(); ++i) {
      for (const auto& s : table.modules[i]) {
        const mpz_class term = s.multiplicity * arith::binomial(d - s.shift + r - 1, r - 1);
        if (i % 2 == 0) {
          value += term;
        } else {
          value -= term;
        }
      }
    }
    h.push_back(value.get_si());
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

BettiTable betti_table(const FamilySpec& spec) {
  validate(spec);
  BettiTable table;
  auto finish = [&]() {
    // Equal twists within a module are merged, ascending.
    for (auto& mod : table.modules) {
      std::map<int, long> merged;
      for (const auto& s : mod) merged[s.shift] += s.multiplicity;
      mod.clear();
      for (const auto& [shift, mult] : merged) mod.push_back({shift, mult});
    }
    table.hilbert = alternating_sum_hilbert(table);
    return table;
  };
  if (const Irr* irr = std::get_if<Irr>(&spec)) return betti_table(Irk{irr->r, irr->r});
  if (const Irk* s = std::get_if<Irk>(&spec)) {
    const int r = s->r;
    const int k = s->k;
    table.num_vars = static_cast<std::size_t>(r);
    table.modules.push_back({{0, 1}});
    for (int i = 1; i <= r; ++i) {
      std::vector<BettiSummand> mod;
      if (i < r) mod.push_back({i * k, arith::binomial(r, i).get_si()});
      mod.push_back({r + (i - 1) * (k - 1), arith::binomial(r, i - 1).get_si()});
      table.modules.push_back(std::move(mod));
    }
    return finish();
  }
  const Aci3* aci = std::get_if<Aci3>(&spec);
  Aci3 converted{};
  if (const LevelAci* level = std::get_if<LevelAci>(&spec)) {
    converted = as_aci3(*level);
    aci = &converted;
  }
  if (aci == nullptr) throw UnsupportedError("Betti table available for I(r,k) and ACI families only");
  const auto& [a, b, c, al, be, ga] = *aci;
  table.num_vars = 3;
  table.modules.push_back({{0, 1}});
  table.modules.push_back({{al + be + ga, 1}, {a, 1}, {b, 1}, {c, 1}});
  table.modules.push_back(
      {{al + be + c, 1}, {al + ga + b, 1}, {be + ga + a, 1}, {b + c, 1}, {a + c, 1}, {a + b, 1}});
  table.modules.push_back({{al + b + c, 1}, {be + a + c, 1}, {ga + a + b, 1}});
  table.minimal = al > 0 && be > 0 && ga > 0;
  return finish();
}

std::string to_string(ConjectureCase c) {
  switch (c) {
    case ConjectureCase::Case1: return "case1";
    case ConjectureCase::Case2: return "case2";
    case ConjectureCase::Case3: return "case3";
    case ConjectureCase::None: break;
  }
  return "none";
}

Predicates predicates(const LevelAci& s) {
  validate(s);
  const int al = s.alpha, be = s.beta, ga = s.gamma, t = s.t;
  const int sum = al + be + ga;
  Predicates p;
  p.semistable = ga <= 2 * (al + be) && 3 * t >= sum;
  p.sum_mod3_zero = sum % 3 == 0;
  if (p.sum_mod3_zero) p.twin_peaks_degree = 2 * sum / 3 + t - 2;

  const bool t_even = t % 2 == 0;
  const int diff = ga - al;
  if (al == be && al % 2 == 0 && diff % 6 == 3 && t_even) {
    const int lambda = diff / 3;
    if (1 <= lambda && lambda <= al && t >= al + lambda) {
      p.conjecture_case = ConjectureCase::Case1;
      return p;
    }
  }
  if (al == be && al % 2 == 1 && diff % 6 == 0 && t_even) {
    const int mu = diff / 6;
    if (mu <= (al - 1) / 2 && t >= al + 2 * mu) {
      p.conjecture_case = ConjectureCase::Case2;
      return p;
    }
  }
  if (be == ga && al % 2 == 1 && diff % 3 == 0 && t_even) {
    const int rho = diff / 3;
    if (t >= al + 2 * rho) p.conjecture_case = ConjectureCase::Case3;
  }
  return p;
}

bool aci3_mod3_obstruction(const Aci3& s) {
  validate_aci3(s);
  return (s.a + s.b + s.c + s.alpha + s.beta + s.gamma) % 3 == 0;
}

bool alpha_zero_wlp(const Aci3& s) {
  validate_aci3(s);
  if (s.alpha != 0) throw DomainError("alpha_zero_wlp needs alpha = 0");
  return true;
}

std::vector<HomogeneousPolynomial> jr_special_forms(int r) {
  if (r < 2) throw DomainError("J(r) needs r >= 2");
  const std::size_t n = static_cast<std::size_t>(r);
  std::vector<HomogeneousPolynomial> forms;
  std::vector<mpq_class> coeffs(n, mpq_class(1));
  coeffs[0] = 2;
  forms.push_back(HomogeneousPolynomial::linear(coeffs));
  for (int t = 1; t <= 8; ++t) {
    std::vector<mpq_class> c(n, mpq_class(1));
    c[0] = t;
    c[n - 1] = -1;
    forms.push_back(HomogeneousPolynomial::linear(c));
  }
  return forms;
}

std::vector<HomogeneousPolynomial> special_forms(const HomogeneousIdeal& ideal) {
  const int r = static_cast<int>(ideal.num_vars());
  if (r < 2 || ideal.is_monomial()) return {};
  auto normalized = [](const HomogeneousIdeal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(g.normalized(arith::FieldSpec::rationals()).to_string());
    std::sort(out.begin(), out.end());
    return out;
  };
  if (normalized(ideal) == normalized(make_ideal(Jr{r}))) return jr_special_forms(r);
  return {};
}

}  // namespace lefschetz::families
