#pragma once

// Hilbert functions along chains of basic double links.

#include <string>
#include <vector>

#include "lefschetz/ideal.hpp"

namespace lefschetz::liaison {

/// h-vector: values[0] = 1, no trailing zeros.
struct HVector {
  std::vector<long> values;

  long at(int j) const {
    return j < 0 || j >= static_cast<int>(values.size()) ? 0 : values[static_cast<std::size_t>(j)];
  }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Coefficients of prod_i (1 + q + ... + q^{d_i - 1}). DomainError on an
/// empty list or a non-positive degree.
HVector ci_hvector(const std::vector<int>& degrees);

/// h'(j) = h_I(j - 1) + h_C(j).
HVector bdl_step(const HVector& h_i, const HVector& h_c);

enum class ChainVariant { Irr, Jr };

struct ChainStep {
  int index = 0;                          // J_index
  algebra::HomogeneousIdeal ideal;        // J_index itself
  int link_variable = -1;                 // 0-based variable used to reach this step, -1 for J_1
  std::vector<int> link_ci_degrees;       // degrees of the complete intersection added, empty for J_1
  HVector hvector;
};

/// J_1, ..., J_r for 3 <= r <= 7 (DomainError otherwise). J_1 is the
/// complete intersection of degrees (1, r-1, ..., r-1); each later row is
/// bdl_step of the previous one with a complete intersection in r-1
/// variables.
std::vector<ChainStep> bdl_chain(int r, ChainVariant variant);

/// The inequality comparing first differences of two complete intersections
/// around their midpoints; 2 <= s <= 9.
struct DiffOfHf {
  long left = 0;   // h_I(binom(s,2)) - h_I(binom(s,2) - 1)
  long right = 0;  // h_J(binom(s,2) + 1) - h_J(binom(s,2) + 2)
  bool holds = false;
};

DiffOfHf diff_of_hf(int s);
bool diff_of_hf_check(int s);

}  // namespace lefschetz::liaison
