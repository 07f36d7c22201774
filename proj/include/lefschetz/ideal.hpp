#pragma once

// Homogeneous ideals and the degree-slice linear algebra of R/I.
//
// Every slice computation works modulo the monomial part M of the ideal:
// (R/M)_d has the standard monomials of M as a basis, and the remaining
// (non-monomial) generators contribute relation rows m*g reduced modulo M.
// No Groebner bases are involved.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lefschetz/arith.hpp"
#include "lefschetz/monomial.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::algebra {

class HomogeneousIdeal {
 public:
  HomogeneousIdeal() = default;
  /// Generators must live in num_vars variables and be nonzero.
  HomogeneousIdeal(std::size_t num_vars, std::vector<HomogeneousPolynomial> generators);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<HomogeneousPolynomial>& generators() const noexcept { return generators_; }
  bool is_monomial() const noexcept { return is_monomial_; }

  /// Leading monomials of the single-term generators.
  std::vector<Monomial> monomial_generators() const;
  /// Generators with two or more terms.
  std::vector<HomogeneousPolynomial> other_generators() const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_variable_names(num_vars_)); }

 private:
  std::size_t num_vars_ = 0;
  std::vector<HomogeneousPolynomial> generators_;
  bool is_monomial_ = true;
};

/// Parses "g1, g2, ..." over the named variables. Coefficients are reduced
/// into the field. Throws ParseError (with position) on bad syntax or an
/// unknown variable, DomainError on an inhomogeneous or vanishing generator.
HomogeneousIdeal parse_ideal(std::string_view text, const std::vector<std::string>& variables,
                             const arith::FieldSpec& field);

/// Parses a single homogeneous polynomial with the same grammar.
HomogeneousPolynomial parse_polynomial(std::string_view text,
                                       const std::vector<std::string>& variables,
                                       const arith::FieldSpec& field);

/// One graded piece of R/I in coordinates of (R/M)_d.
struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> basis;  // standard monomials of M, canonical order
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  arith::ExactMatrix relations;  // non-monomial multiples reduced modulo M
  std::size_t relation_rank = 0;

  std::size_t dimension() const { return basis.size() - relation_rank; }
  /// Coordinate row of p modulo M (terms in M dropped; denominators cleared
  /// over Q, which keeps the row's span).
  std::vector<mpz_class> coordinates(const HomogeneousPolynomial& p,
                                     const arith::FieldSpec& field) const;
};

DegreeSlice degree_slice(const HomogeneousIdeal& ideal, int degree, const arith::FieldSpec& field);

/// Degree-d monomials divisible by no generator (monomial ideals only).
std::vector<Monomial> standard_monomials(const HomogeneousIdeal& ideal, int degree);

bool is_artinian(const HomogeneousIdeal& ideal,
                 const arith::FieldSpec& field = arith::FieldSpec::rationals());

struct HilbertProfile {
  std::vector<std::size_t> values;  // h(0..D), h(D) > 0

  /// D, or -1 for the zero algebra.
  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  std::size_t at(int d) const {
    return d < 0 || d >= static_cast<int>(values.size()) ? 0 : values[static_cast<std::size_t>(d)];
  }
  std::size_t total() const;

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

/// Degree cap for detecting the end of an Artinian quotient.
int artinian_degree_cap(const HomogeneousIdeal& ideal);

/// Throws NotArtinianError when h does not vanish by the degree cap.
HilbertProfile hilbert_profile(const HomogeneousIdeal& ideal,
                               const arith::FieldSpec& field = arith::FieldSpec::rationals());

struct SocleReport {
  std::vector<Monomial> socle_monomials;  // ascending degree, canonical order within a degree
  std::vector<int> socle_degrees;         // distinct, ascending
  std::size_t cm_type = 0;
  bool is_level = false;
};

SocleReport socle_report(const HomogeneousIdeal& ideal);

/// Eliminates the pivot variable using L = 0. The result lives in
/// num_vars - 1 variables; zero images are dropped and the rest scaled to
/// leading coefficient 1.
HomogeneousIdeal restrict_modulo_linear(const HomogeneousIdeal& ideal,
                                        const HomogeneousPolynomial& linear_form,
                                        std::size_t pivot);

/// True iff p lies in the span of I in degree deg(p).
bool in_ideal(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& p,
              const arith::FieldSpec& field);

}  // namespace lefschetz::algebra
