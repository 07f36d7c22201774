#include "lefschetz/arith.hpp"
#include "lefschetz/errors.hpp"

namespace lefschetz::arith {

mpz_class Factorization::reassemble() const {
  mpz_class out = cofactor;
  for (const auto& [prime, exponent] : factors) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), exponent);
    out *= power;
  }
  return out;
}

Factorization factor(const mpz_class& n) {
  if (n == 0) throw DomainError("cannot factor 0");
  Factorization out;
  mpz_class rest = abs(n);

  auto strip = [&](unsigned long d) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++exponent;
    }
    if (exponent > 0) out.factors.emplace_back(mpz_class(d), exponent);
  };

  strip(2);
  unsigned long d = 3;
  for (; d <= kTrialDivisionBound; d += 2) {
    if (mpz_class(d) * d > rest) break;
    strip(d);
  }
  if (rest > 1) {
    // Every d below the stopping point was tried: if d*d > rest the
    // remainder is prime, otherwise it stays as an unfactored cofactor.
    if (mpz_class(d) * d > rest) {
      out.factors.emplace_back(rest, 1U);
    } else {
      out.cofactor = rest;
    }
  }
  return out;
}

}  // namespace lefschetz::arith
