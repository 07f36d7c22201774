#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lefschetz::algebra {

/// Exponent vector x_1^{e_1} ... x_r^{e_r}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }
  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Index of the only variable present, or -1 (also for the unit).
  int pure_power_variable() const;
  /// Drops variable `index`; requires its exponent to be zero.
  Monomial without_variable(std::size_t index) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Canonical order: higher degree first, then lexicographic with
/// x_1 > x_2 > ... > x_r. Listing in this order puts x_1^d first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All degree-d monomials in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree);

/// x, y, z for up to three variables, x1 ... xr otherwise.
std::vector<std::string> default_variable_names(std::size_t num_vars);

}  // namespace lefschetz::algebra
