#include "lefschetz/liaison.hpp"

#include <algorithm>

#include "lefschetz/errors.hpp"

namespace lefschetz::liaison {

using algebra::HomogeneousIdeal;
using algebra::HomogeneousPolynomial;
using algebra::Monomial;

namespace {

void trim(HVector& h) {
  while (!h.values.empty() && h.values.back() == 0) h.values.pop_back();
}

HomogeneousPolynomial power(std::size_t r, std::size_t i, int k) {
  return HomogeneousPolynomial::from_monomial(Monomial::variable(r, i, k));
}

// Product of the variables with indices in [from, to).
Monomial block(std::size_t r, std::size_t from, std::size_t to) {
  std::vector<int> e(r, 0);
  for (std::size_t i = from; i < to; ++i) e[i] = 1;
  return Monomial(e);
}

// J_i = (x_1^r..x_i^r, x_{i+1}^{r-1}..x_r^{r-1}, x_1...x_i); J_1 keeps x_1 alone.
HomogeneousIdeal irr_step_ideal(int r, int i) {
  const std::size_t n = static_cast<std::size_t>(r);
  const std::size_t m = static_cast<std::size_t>(i);
  std::vector<HomogeneousPolynomial> gens;
  if (i == 1) {
    gens.push_back(power(n, 0, 1));
  } else {
    for (std::size_t j = 0; j < m; ++j) gens.push_back(power(n, j, r));
  }
  for (std::size_t j = m; j < n; ++j) gens.push_back(power(n, j, r - 1));
  if (i > 1) gens.push_back(HomogeneousPolynomial::from_monomial(block(n, 0, m)));
  return HomogeneousIdeal(n, std::move(gens));
}

// Parallel chain: powers r-1 on x_1..x_{r-i}, r on the rest, and
// (x_1 + x_r) x_{r-i+1} ... x_{r-1}.
HomogeneousIdeal jr_step_ideal(int r, int i) {
  const std::size_t n = static_cast<std::size_t>(r);
  const std::size_t low = n - static_cast<std::size_t>(i);  // variables keeping power r-1
  std::vector<HomogeneousPolynomial> gens;
  for (std::size_t j = 0; j < n - 1; ++j) gens.push_back(power(n, j, j < low ? r - 1 : r));
  gens.push_back(power(n, n - 1, r));
  HomogeneousPolynomial sum(n, 1);
  sum.add_term(Monomial::variable(n, 0), 1);
  sum.add_term(Monomial::variable(n, n - 1), 1);
  gens.push_back(sum * block(n, low, n - 1));
  return HomogeneousIdeal(n, std::move(gens));
}

}  // namespace

HVector ci_hvector(const std::vector<int>& degrees) {
  if (degrees.empty()) throw DomainError("complete intersection needs at least one degree");
  HVector h{{1}};
  for (int d : degrees) {
    if (d <= 0) throw DomainError("complete intersection degrees must be positive");
    std::vector<long> next(h.values.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t j = 0; j < h.values.size(); ++j) {
      for (int e = 0; e < d; ++e) next[j + static_cast<std::size_t>(e)] += h.values[j];
    }
    h.values = std::move(next);
  }
  trim(h);
  return h;
}

HVector bdl_step(const HVector& h_i, const HVector& h_c) {
  const std::size_t len = std::max(h_i.values.size() + 1, h_c.values.size());
  HVector out;
  out.values.assign(len, 0);
  for (std::size_t j = 0; j < len; ++j) {
    out.values[j] = h_i.at(static_cast<int>(j) - 1) + h_c.at(static_cast<int>(j));
  }
  trim(out);
  return out;
}

std::vector<ChainStep> bdl_chain(int r, ChainVariant variant) {
  if (r < 3 || r > 7) throw DomainError("basic double link chain supports 3 <= r <= 7");
  std::vector<ChainStep> chain;
  ChainStep first;
  first.index = 1;
  first.ideal = variant == ChainVariant::Irr ? irr_step_ideal(r, 1) : jr_step_ideal(r, 1);
  std::vector<int> start(static_cast<std::size_t>(r - 1), r - 1);
  start.insert(start.begin(), 1);
  first.hvector = ci_hvector(start);
  chain.push_back(std::move(first));
  for (int i = 1; i < r; ++i) {
    ChainStep step;
    step.index = i + 1;
    // i degrees r and r-1-i degrees r-1, in r-1 variables
    std::vector<int> degrees(static_cast<std::size_t>(i), r);
    degrees.insert(degrees.end(), static_cast<std::size_t>(r - 1 - i), r - 1);
    if (variant == ChainVariant::Irr) {
      step.ideal = irr_step_ideal(r, i + 1);
      step.link_variable = i;
    } else {
      step.ideal = jr_step_ideal(r, i + 1);
      step.link_variable = r - 1 - i;
      std::reverse(degrees.begin(), degrees.end());
    }
    step.link_ci_degrees = degrees;
    step.hvector = bdl_step(chain.back().hvector, ci_hvector(degrees));
    chain.push_back(std::move(step));
  }
  return chain;
}

DiffOfHf diff_of_hf(int s) {
  if (s < 2 || s > 9) throw DomainError("diff_of_hf supports 2 <= s <= 9");
  const HVector hi = ci_hvector(std::vector<int>(static_cast<std::size_t>(s), s));
  std::vector<int> jd{s + 1, s + 1};
  jd.insert(jd.end(), static_cast<std::size_t>(s - 2), s);
  const HVector hj = ci_hvector(jd);
  const int mid = s * (s - 1) / 2;
  DiffOfHf out;
  out.left = hi.at(mid) - hi.at(mid - 1);
  out.right = hj.at(mid + 1) - hj.at(mid + 2);
  out.holds = out.left <= out.right;
  return out;
}

bool diff_of_hf_check(int s) { return diff_of_hf(s).holds; }

}  // namespace lefschetz::liaison
