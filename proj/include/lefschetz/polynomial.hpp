#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "lefschetz/arith.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz::algebra {

/// Homogeneous polynomial with rational coefficients. The zero polynomial
/// keeps its degree tag. Coefficients are exact rationals; a FieldSpec is
/// applied with reduced() or when slices are built.
class HomogeneousPolynomial {
 public:
  using Terms = std::map<Monomial, mpq_class, CanonicalOrder>;

  HomogeneousPolynomial() = default;
  HomogeneousPolynomial(std::size_t num_vars, int degree) : num_vars_(num_vars), degree_(degree) {}

  static HomogeneousPolynomial from_monomial(const Monomial& m, const mpq_class& c = 1);
  /// sum_i coefficients[i] * x_i
  static HomogeneousPolynomial linear(const std::vector<mpq_class>& coefficients);
  static HomogeneousPolynomial all_ones(std::size_t num_vars);

  std::size_t num_vars() const noexcept { return num_vars_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  mpq_class coefficient(const Monomial& m) const;

  /// Adds c*m; drops the term if the coefficient cancels.
  void add_term(const Monomial& m, const mpq_class& c);

  HomogeneousPolynomial operator+(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator-(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator*(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial operator*(const Monomial& m) const;
  HomogeneousPolynomial scaled(const mpq_class& c) const;
  HomogeneousPolynomial pow(int exponent) const;

  /// Coefficients mapped to the field's canonical representatives.
  HomogeneousPolynomial reduced(const arith::FieldSpec& field) const;
  /// Reduced and scaled so the first term in canonical order has coefficient 1.
  HomogeneousPolynomial normalized(const arith::FieldSpec& field) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_variable_names(num_vars_)); }

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  std::size_t num_vars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

}  // namespace lefschetz::algebra
