#pragma once

// Multiplication maps on graded pieces of R/I and Weak Lefschetz verdicts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lefschetz/arith.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::wlp {

using algebra::HomogeneousIdeal;
using algebra::HomogeneousPolynomial;
using arith::FieldSpec;

inline constexpr std::uint64_t kDefaultSeed = 0xC0C0A;

struct MultMapRank {
  std::size_t h_source = 0;  // dim (R/I)_d
  std::size_t h_target = 0;  // dim (R/I)_{d+e}
  std::size_t rank = 0;
};

/// Rank of x F : (R/I)_d -> (R/I)_{d+e}.
MultMapRank mult_map_rank(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& form, int d,
                          const FieldSpec& field);

/// Matrix of x F for a monomial ideal: rows indexed by the standard
/// monomials of degree d, columns by those of degree d+e.
arith::ExactMatrix multiplication_matrix(const HomogeneousIdeal& ideal,
                                         const HomogeneousPolynomial& form, int d,
                                         const FieldSpec& field);

enum class Strategy { AllOnes, Explicit, SeededRandom, FamilyForms };

struct WlpOptions {
  Strategy strategy = Strategy::AllOnes;
  std::optional<HomogeneousPolynomial> form;  // Strategy::Explicit
  std::size_t trials = 5;
  std::uint64_t seed = kDefaultSeed;
  // Forms singled out for a recognized family (Strategy::FamilyForms). When all of
  // them fail, the failure counts as conclusive.
  std::vector<HomogeneousPolynomial> special_forms;
  bool level_shortcut = true;
};

struct DegreeReport {
  int d = 0;
  std::size_t h_d = 0;
  std::size_t h_d1 = 0;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool maximal = false;
  bool inferred = false;  // filled in by the propagation rules, not computed

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct WlpVerdict {
  std::vector<DegreeReport> reports;  // d = 0 .. socle degree
  bool has_wlp = false;
  std::vector<int> failure_degrees;
  HomogeneousPolynomial form_used;
  FieldSpec field;
  bool conclusive = false;
  std::size_t forms_tried = 0;
};

/// Degree reports for one linear form.
std::vector<DegreeReport> degree_reports(const HomogeneousIdeal& ideal,
                                         const HomogeneousPolynomial& linear_form,
                                         const FieldSpec& field, bool level_shortcut = true);

WlpVerdict wlp_check(const HomogeneousIdeal& ideal, const FieldSpec& field,
                     const WlpOptions& options = {});

/// Linear form with coefficients drawn from [-100, 100] \ {0}, nonzero in
/// the field. Successive calls on one generator give successive forms.
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed);
  HomogeneousPolynomial next(std::size_t num_vars, const FieldSpec& field);
  /// Uniform integer in [lo, hi] by rejection; std distributions are not
  /// reproducible across standard libraries.
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Nonzero f in (R/I)_d with L f = 0 in (R/I)_{d+1}, first coefficient 1;
/// nullopt when x L is injective in degree d. L defaults to x_1 + ... + x_r.
std::optional<HomogeneousPolynomial> kernel_witness(
    const HomogeneousIdeal& ideal, const FieldSpec& field, int d,
    const std::optional<HomogeneousPolynomial>& linear_form = std::nullopt);

/// f not in I and L f in I.
bool verify_kernel_element(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& f,
                           const HomogeneousPolynomial& linear_form, const FieldSpec& field);

}  // namespace lefschetz::wlp
