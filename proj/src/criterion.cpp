#include "lefschetz/criterion.hpp"

#include <algorithm>
#include <numeric>

#include "lefschetz/errors.hpp"

namespace lefschetz::criterion {

using algebra::HomogeneousPolynomial;
using algebra::Monomial;

bool hypotheses_ok(int alpha, int beta, int gamma, int t) {
  const int sum = alpha + beta + gamma;
  return 0 < alpha && alpha <= beta && beta <= gamma && gamma <= 2 * (alpha + beta) &&
         3 * t >= sum && sum % 3 == 0 && matrix_size(alpha, beta, gamma, t) >= 1;
}

int matrix_size(int alpha, int beta, int gamma, int t) { return t + (alpha + beta - 2 * gamma) / 3; }

arith::ExactMatrix build_M(int alpha, int beta, int gamma, int t) {
  const int sum = alpha + beta + gamma;
  if (!(0 < alpha && alpha <= beta && beta <= gamma && gamma <= 2 * (alpha + beta))) {
    throw DomainError("criterion needs 0 < alpha <= beta <= gamma <= 2(alpha + beta)");
  }
  if (3 * t < sum) throw DomainError("criterion needs t >= (alpha + beta + gamma) / 3");
  if (sum % 3 != 0) throw DomainError("criterion needs alpha + beta + gamma = 0 mod 3");
  const int n = matrix_size(alpha, beta, gamma, t);
  if (n <= 0) throw DomainError("criterion inapplicable: matrix size " + std::to_string(n));

  const int s = sum / 3;
  const int top = t - s;
  const int bottom = (2 * alpha + 2 * beta - gamma) / 3;
  arith::ExactMatrix m(arith::FieldSpec::rationals(), 0, static_cast<std::size_t>(n));
  std::vector<mpz_class> row(static_cast<std::size_t>(n));
  for (int i = 0; i < top; ++i) {
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = arith::binomial(gamma, s + i - j);
    m.append_row(row);
  }
  for (int i = 0; i < bottom; ++i) {
    for (int j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(j)] = arith::binomial(gamma + t, t + beta - 1 - i - j);
    }
    m.append_row(row);
  }
  return m;
}

bool CriterionReport::predicts_wlp(std::uint64_t p) const {
  if (fails_in_every_characteristic) return false;
  if (p == 0) return true;
  return std::find(failing_characteristics.begin(), failing_characteristics.end(), p) ==
         failing_characteristics.end();
}

CriterionReport criterion_report(int alpha, int beta, int gamma, int t) {
  CriterionReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.gamma = gamma;
  rep.t = t;
  rep.M = build_M(alpha, beta, gamma, t);
  rep.hypotheses_ok = true;
  rep.size = static_cast<int>(rep.M.rows());
  rep.det = arith::det_integer(rep.M);
  if (rep.det == 0) {
    rep.fails_in_every_characteristic = true;
    return rep;
  }
  rep.factors = arith::factor(rep.det);
  for (const auto& [p, e] : rep.factors.factors) rep.failing_characteristics.push_back(p.get_ui());
  return rep;
}

namespace {

// Drops every term with an exponent >= bound.
HomogeneousPolynomial modulo_powers(const HomogeneousPolynomial& p, int bound) {
  HomogeneousPolynomial out(p.num_vars(), p.degree());
  for (const auto& [m, c] : p.terms()) {
    const auto& e = m.exponents();
    if (std::all_of(e.begin(), e.end(), [&](int v) { return v < bound; })) out.add_term(m, c);
  }
  return out;
}

}  // namespace

VandermondeWitness vandermonde_witness(int r) {
  if (r < 3 || r > 7) throw DomainError("Vandermonde witness supports 3 <= r <= 7");
  const std::size_t n = static_cast<std::size_t>(r - 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int degree = static_cast<int>(n * (n - 1) / 2);
  HomogeneousPolynomial F(n, degree);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    F.add_term(Monomial(perm), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  VandermondeWitness w;
  w.r = r;
  w.F = F;
  const HomogeneousPolynomial sum = HomogeneousPolynomial::all_ones(n);
  const Monomial all(std::vector<int>(n, 1));
  w.first_membership = modulo_powers(F * all * sum, r).is_zero();
  w.second_membership = modulo_powers(F * sum.pow(r), r).is_zero();
  w.nonzero_modulo_powers = !F.is_zero() && modulo_powers(F, r - 1) == F;
  return w;
}

arith::ExactMatrix r4_surjectivity_matrix() {
  const std::size_t n = 3;
  auto var = [&](std::size_t i, int k = 1) { return HomogeneousPolynomial::from_monomial(Monomial::variable(n, i, k)); };
  const HomogeneousPolynomial w = var(0), x = var(1), y = var(2);
  std::vector<HomogeneousPolynomial> fs{
      var(0, 4),
      var(1, 4),
      var(2, 4),
      (w.scaled(2) + x + y).pow(4),
      w * x * y * (w + x + y),
  };
  const std::vector<HomogeneousPolynomial> qs{w * w, w * x, x * x, w * y, x * y, y * y};
  const auto columns = algebra::monomials_of_degree(n, 6);
  arith::ExactMatrix m(arith::FieldSpec::rationals(), 0, columns.size());
  for (const auto& f : fs) {
    for (const auto& q : qs) {
      const HomogeneousPolynomial product = f * q;
      std::vector<mpz_class> row;
      for (const auto& c : columns) row.push_back(product.coefficient(c).get_num());
      m.append_row(row);
    }
  }
  return m;
}

}  // namespace lefschetz::criterion
