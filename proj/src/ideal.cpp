#include "lefschetz/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lefschetz/errors.hpp"

namespace lefschetz::algebra {

HomogeneousIdeal::HomogeneousIdeal(std::size_t num_vars,
                                   std::vector<HomogeneousPolynomial> generators)
    : num_vars_(num_vars), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.num_vars() != num_vars_) {
      throw DimensionError("generator in " + std::to_string(g.num_vars()) +
                           " variables for an ideal in " + std::to_string(num_vars_));
    }
    if (g.is_zero()) throw DomainError("zero generator");
    if (!g.is_monomial()) is_monomial_ = false;
  }
}

std::vector<Monomial> HomogeneousIdeal::monomial_generators() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) {
    if (g.is_monomial()) out.push_back(g.terms().begin()->first);
  }
  return out;
}

std::vector<HomogeneousPolynomial> HomogeneousIdeal::other_generators() const {
  std::vector<HomogeneousPolynomial> out;
  for (const auto& g : generators_) {
    if (!g.is_monomial()) out.push_back(g);
  }
  return out;
}

std::string HomogeneousIdeal::to_string(const std::vector<std::string>& names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string(names);
  }
  return out + ")";
}

namespace {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// Monomial part and remaining generators after reduction into the field.
struct SplitIdeal {
  std::vector<Monomial> monomials;
  std::vector<HomogeneousPolynomial> others;
};

SplitIdeal split(const HomogeneousIdeal& ideal, const arith::FieldSpec& field) {
  SplitIdeal out;
  for (const auto& g : ideal.generators()) {
    HomogeneousPolynomial r = g.reduced(field);
    if (r.is_zero()) continue;
    if (r.is_monomial()) {
      out.monomials.push_back(r.terms().begin()->first);
    } else {
      out.others.push_back(std::move(r));
    }
  }
  return out;
}

DegreeSlice build_slice(const SplitIdeal& parts, std::size_t num_vars, int degree,
                        const arith::FieldSpec& field) {
  DegreeSlice slice;
  slice.degree = degree;
  for (auto& m : monomials_of_degree(num_vars, degree)) {
    if (!divisible_by_any(m, parts.monomials)) {
      slice.column.emplace(m, slice.basis.size());
      slice.basis.push_back(std::move(m));
    }
  }
  slice.relations = arith::ExactMatrix(field, 0, slice.basis.size());
  if (slice.basis.empty()) return slice;
  for (const auto& g : parts.others) {
    if (g.degree() > degree) continue;
    for (const auto& m : monomials_of_degree(num_vars, degree - g.degree())) {
      if (divisible_by_any(m, parts.monomials)) continue;
      auto row = slice.coordinates(g * m, field);
      if (std::all_of(row.begin(), row.end(), [](const mpz_class& v) { return v == 0; })) {
        continue;
      }
      slice.relations.append_row(row);
    }
  }
  slice.relation_rank = arith::rank(slice.relations);
  return slice;
}

}  // namespace

std::vector<mpz_class> DegreeSlice::coordinates(const HomogeneousPolynomial& p,
                                                const arith::FieldSpec& field) const {
  std::vector<mpq_class> values(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = column.find(m);
    if (it != column.end()) values[it->second] = field.reduce(c);
  }
  mpz_class scale = 1;
  for (const auto& v : values) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<mpz_class> row(basis.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    row[i] = values[i].get_num() * (scale / values[i].get_den());
  }
  return row;
}

DegreeSlice degree_slice(const HomogeneousIdeal& ideal, int degree, const arith::FieldSpec& field) {
  return build_slice(split(ideal, field), ideal.num_vars(), degree, field);
}

std::vector<Monomial> standard_monomials(const HomogeneousIdeal& ideal, int degree) {
  if (!ideal.is_monomial()) {
    throw UnsupportedError("standard monomials need a monomial ideal; use degree slices instead");
  }
  const auto gens = ideal.monomial_generators();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ideal.num_vars(), degree)) {
    if (!divisible_by_any(m, gens)) out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Variable without a pure power among the monomial generators, if any.
std::optional<std::size_t> variable_without_pure_power(std::size_t num_vars,
                                                       const std::vector<Monomial>& gens) {
  std::vector<bool> covered(num_vars, false);
  for (const auto& g : gens) {
    const int v = g.pure_power_variable();
    if (v >= 0) covered[static_cast<std::size_t>(v)] = true;
    if (g.degree() == 0) return std::nullopt;  // unit ideal
  }
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (!covered[i]) return i;
  }
  return std::nullopt;
}

}  // namespace

int artinian_degree_cap(const HomogeneousIdeal& ideal) {
  int cap = 0;
  for (const auto& g : ideal.generators()) cap += g.degree();
  return cap;
}

std::size_t HilbertProfile::total() const {
  return std::accumulate(values.begin(), values.end(), std::size_t{0});
}

HilbertProfile hilbert_profile(const HomogeneousIdeal& ideal, const arith::FieldSpec& field) {
  const SplitIdeal parts = split(ideal, field);
  const auto missing = variable_without_pure_power(ideal.num_vars(), parts.monomials);
  const bool monomial_artinian = !missing.has_value();
  if (parts.others.empty() && !monomial_artinian) {
    throw NotArtinianError("not Artinian: variable " +
                           default_variable_names(ideal.num_vars())[*missing] +
                           " has no pure power among the generators");
  }
  const int cap = artinian_degree_cap(ideal);
  HilbertProfile profile;
  for (int d = 0;; ++d) {
    if (!monomial_artinian && d > cap) {
      throw NotArtinianError("not Artinian: Hilbert function does not vanish up to degree cap " +
                             std::to_string(cap));
    }
    std::size_t h;
    if (parts.others.empty()) {
      h = 0;
      for (const auto& m : monomials_of_degree(ideal.num_vars(), d)) {
        if (!divisible_by_any(m, parts.monomials)) ++h;
      }
    } else {
      h = build_slice(parts, ideal.num_vars(), d, field).dimension();
    }
    if (h == 0) break;
    profile.values.push_back(h);
  }
  return profile;
}

bool is_artinian(const HomogeneousIdeal& ideal, const arith::FieldSpec& field) {
  const SplitIdeal parts = split(ideal, field);
  if (!variable_without_pure_power(ideal.num_vars(), parts.monomials).has_value()) return true;
  if (parts.others.empty()) return false;
  try {
    hilbert_profile(ideal, field);
    return true;
  } catch (const NotArtinianError&) {
    return false;
  }
}

SocleReport socle_report(const HomogeneousIdeal& ideal) {
  if (!ideal.is_monomial()) throw UnsupportedError("socle report needs a monomial ideal");
  const HilbertProfile profile = hilbert_profile(ideal);
  const auto gens = ideal.monomial_generators();
  const std::size_t r = ideal.num_vars();
  SocleReport report;
  std::set<int> degrees;
  for (int d = 0; d <= profile.socle_degree(); ++d) {
    for (const auto& m : standard_monomials(ideal, d)) {
      bool annihilated = true;
      for (std::size_t i = 0; i < r && annihilated; ++i) {
        annihilated = divisible_by_any(m * Monomial::variable(r, i), gens);
      }
      if (annihilated) {
        report.socle_monomials.push_back(m);
        degrees.insert(d);
      }
    }
  }
  report.socle_degrees.assign(degrees.begin(), degrees.end());
  report.cm_type = report.socle_monomials.size();
  report.is_level = report.socle_degrees.size() == 1;
  return report;
}

HomogeneousIdeal restrict_modulo_linear(const HomogeneousIdeal& ideal,
                                        const HomogeneousPolynomial& linear_form,
                                        std::size_t pivot) {
  const std::size_t r = ideal.num_vars();
  if (linear_form.degree() != 1 || linear_form.num_vars() != r) {
    throw DimensionError("restriction needs a linear form in the ideal's variables");
  }
  if (pivot >= r) throw DimensionError("pivot variable out of range");
  const mpq_class a = linear_form.coefficient(Monomial::variable(r, pivot));
  if (a == 0) throw DomainError("pivot variable has zero coefficient in the linear form");

  // x_pivot = -(1/a) * sum_{i != pivot} a_i x_i
  std::vector<mpq_class> sub;
  for (std::size_t i = 0; i < r; ++i) {
    if (i == pivot) continue;
    sub.push_back(mpq_class(-linear_form.coefficient(Monomial::variable(r, i)) / a));
  }
  const HomogeneousPolynomial substitute = HomogeneousPolynomial::linear(sub);
  std::vector<HomogeneousPolynomial> powers{HomogeneousPolynomial::from_monomial(Monomial::one(r - 1))};

  std::vector<HomogeneousPolynomial> gens;
  for (const auto& g : ideal.generators()) {
    HomogeneousPolynomial image(r - 1, g.degree());
    for (const auto& [m, c] : g.terms()) {
      const int e = m[pivot];
      while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * substitute);
      std::vector<int> rest = m.exponents();
      rest[pivot] = 0;
      const Monomial outside = Monomial(std::move(rest)).without_variable(pivot);
      image = image + (powers[static_cast<std::size_t>(e)] * outside).scaled(c);
    }
    if (!image.is_zero()) gens.push_back(image.normalized(arith::FieldSpec::rationals()));
  }
  return HomogeneousIdeal(r - 1, std::move(gens));
}

bool in_ideal(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& p,
              const arith::FieldSpec& field) {
  const DegreeSlice slice = degree_slice(ideal, p.degree(), field);
  const auto row = slice.coordinates(p, field);
  if (std::all_of(row.begin(), row.end(), [](const mpz_class& v) { return v == 0; })) return true;
  arith::ExactMatrix extended = slice.relations;
  extended.append_row(row);
  return arith::rank(extended) == slice.relation_rank;
}

}  // namespace lefschetz::algebra
