#include "lefschetz/polynomial.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz::algebra {

HomogeneousPolynomial HomogeneousPolynomial::from_monomial(const Monomial& m, const mpq_class& c) {
  HomogeneousPolynomial p(m.num_vars(), m.degree());
  p.add_term(m, c);
  return p;
}

HomogeneousPolynomial HomogeneousPolynomial::linear(const std::vector<mpq_class>& coefficients) {
  const std::size_t n = coefficients.size();
  HomogeneousPolynomial p(n, 1);
  for (std::size_t i = 0; i < n; ++i) p.add_term(Monomial::variable(n, i), coefficients[i]);
  return p;
}

HomogeneousPolynomial HomogeneousPolynomial::all_ones(std::size_t num_vars) {
  return linear(std::vector<mpq_class>(num_vars, mpq_class(1)));
}

mpq_class HomogeneousPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void HomogeneousPolynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.num_vars() != num_vars_ || m.degree() != degree_) {
    throw DimensionError("term " + m.to_string(default_variable_names(m.num_vars())) +
                         " does not match polynomial of degree " + std::to_string(degree_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomogeneousPolynomial HomogeneousPolynomial::operator+(const HomogeneousPolynomial& other) const {
  if (other.num_vars_ != num_vars_ || other.degree_ != degree_) {
    throw DimensionError("adding polynomials of different shape");
  }
  HomogeneousPolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-(const HomogeneousPolynomial& other) const {
  return *this + other.scaled(-1);
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const HomogeneousPolynomial& other) const {
  if (other.num_vars_ != num_vars_) throw DimensionError("multiplying across different rings");
  HomogeneousPolynomial out(num_vars_, degree_ + other.degree_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
  }
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const Monomial& m) const {
  HomogeneousPolynomial out(num_vars_, degree_ + m.degree());
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(const mpq_class& c) const {
  HomogeneousPolynomial out(num_vars_, degree_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative power of a polynomial");
  HomogeneousPolynomial result = from_monomial(Monomial::one(num_vars_));
  HomogeneousPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

HomogeneousPolynomial HomogeneousPolynomial::reduced(const arith::FieldSpec& field) const {
  if (field.is_rational()) return *this;
  HomogeneousPolynomial out(num_vars_, degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, field.reduce(c));
  return out;
}

HomogeneousPolynomial HomogeneousPolynomial::normalized(const arith::FieldSpec& field) const {
  HomogeneousPolynomial out = reduced(field);
  if (out.is_zero()) return out;
  const mpq_class lead = out.terms_.begin()->second;
  return out.scaled(field.reduce(mpq_class(1 / lead))).reduced(field);
}

std::string HomogeneousPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpq_class magnitude = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit_monomial = (m.degree() == 0);
    if (magnitude != 1 || unit_monomial) {
      out += magnitude.get_str();
      if (!unit_monomial) out += '*';
    }
    if (!unit_monomial) out += m.to_string(names);
  }
  return out;
}

}  // namespace lefschetz::algebra
