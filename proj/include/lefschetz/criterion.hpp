#pragma once

// The binomial determinant criterion for level almost complete
// intersections in three variables, and two explicit certificates.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "lefschetz/arith.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::criterion {

/// Hypotheses: 0 < alpha <= beta <= gamma <= 2(alpha + beta),
/// 3t >= alpha + beta + gamma, alpha + beta + gamma = 0 mod 3, size >= 1.
bool hypotheses_ok(int alpha, int beta, int gamma, int t);

/// Matrix size t + (alpha + beta - 2 gamma) / 3 (meaningful when the sum is divisible by 3).
int matrix_size(int alpha, int beta, int gamma, int t);

/// Throws DomainError when the hypotheses fail.
arith::ExactMatrix build_M(int alpha, int beta, int gamma, int t);

struct CriterionReport {
  int alpha = 0, beta = 0, gamma = 0, t = 0;
  int size = 0;
  arith::ExactMatrix M;
  mpz_class det;
  arith::Factorization factors;  // empty when det = 0
  bool fails_in_every_characteristic = false;  // det = 0
  std::vector<std::uint64_t> failing_characteristics;  // primes dividing det
  bool hypotheses_ok = false;

  /// Predicted WLP verdict in characteristic p (0 for Q).
  bool predicts_wlp(std::uint64_t p) const;
};

CriterionReport criterion_report(int alpha, int beta, int gamma, int t);

struct VandermondeWitness {
  int r = 0;
  algebra::HomogeneousPolynomial F;  // in r - 1 variables
  bool first_membership = false;   // F x_1...x_{r-1} (x_1+...+x_{r-1}) in (x_i^r)
  bool second_membership = false;  // F (x_1+...+x_{r-1})^r in (x_i^r)
  bool nonzero_modulo_powers = false;  // every exponent of F at most r - 2
};

/// 3 <= r <= 7.
VandermondeWitness vandermonde_witness(int r);

/// Rows f*q for f in (w^4, x^4, y^4, (2w+x+y)^4, wxy(w+x+y)) and q running
/// over the degree-2 monomials w^2, wx, x^2, wy, xy, y^2; columns the 28
/// degree-6 monomials in canonical order.
arith::ExactMatrix r4_surjectivity_matrix();

}  // namespace lefschetz::criterion
