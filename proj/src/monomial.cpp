#include "lefschetz/monomial.hpp"

#include <numeric>
#include <stdexcept>

#include "lefschetz/errors.hpp"

namespace lefschetz::algebra {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  std::vector<int> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.num_vars() != num_vars()) {
    throw DimensionError("monomials in different numbers of variables");
  }
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  out.degree_ += other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

int Monomial::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial Monomial::without_variable(std::size_t index) const {
  if (exponents_.at(index) != 0) throw DomainError("variable still present in monomial");
  std::vector<int> e = exponents_;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.exponents() > b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  }
  return h;
}

namespace {

void fill(std::size_t var, int remaining, std::vector<int>& current, std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    fill(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (num_vars == 0) {
    if (degree == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<int> current(num_vars, 0);
  fill(0, degree, current, out);
  return out;
}

std::vector<std::string> default_variable_names(std::size_t num_vars) {
  static const std::vector<std::string> small = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) {
    names.push_back(num_vars <= 3 ? small[i] : "x" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace lefschetz::algebra
