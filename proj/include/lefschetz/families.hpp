#pragma once

// The ideal families studied here, with structural metadata and the
// arithmetic predicates used by the sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lefschetz/arith.hpp"
#include "lefschetz/ideal.hpp"

namespace lefschetz::families {

using algebra::HomogeneousIdeal;
using algebra::HomogeneousPolynomial;
using algebra::Monomial;

/// (x_1^k, ..., x_r^k) + all squarefree monomials of degree d.
struct Irkd {
  int r, k, d;
};
/// (x_1^k, ..., x_r^k, x_1 ... x_r).
struct Irk {
  int r, k;
};
struct Irr {
  int r;
};
/// (x_1^r, ..., x_r^r, x_1 ... x_{r-1} (x_1 + x_r)).
struct Jr {
  int r;
};
/// (x^a, y^b, z^c, x^alpha y^beta z^gamma), not a complete intersection.
struct Aci3 {
  int a, b, c, alpha, beta, gamma;
};
/// Aci3 with a = alpha + t, b = beta + t, c = gamma + t.
struct LevelAci {
  int alpha, beta, gamma, t;
};
enum class InjnVariant { Power, General };
/// (x_1^N, ..., x_4^N, F) with F = (x_1 + ... + x_4)^N or a seeded general form.
struct Injn {
  int N;
  InjnVariant variant = InjnVariant::Power;
  std::uint64_t seed = 0;
};

using FamilySpec = std::variant<Irkd, Irk, Irr, Jr, Aci3, LevelAci, Injn>;

/// Throws DomainError naming the violated constraint.
void validate(const FamilySpec& spec);

/// e.g. "I(3,3,3)", "J(4)", "ACI(3,3,3;1,1,1)".
std::string describe(const FamilySpec& spec);

std::size_t num_variables(const FamilySpec& spec);

/// Generators are reduced into the field; ones that vanish there are dropped.
HomogeneousIdeal make_ideal(const FamilySpec& spec,
                            const arith::FieldSpec& field = arith::FieldSpec::rationals());

Aci3 as_aci3(const LevelAci& spec);

struct Aci3Metadata {
  std::vector<Monomial> inverse_system;  // dual socle generators, terms with a -1 exponent removed
  int cm_type = 0;
  std::vector<int> socle_degrees;  // one per inverse-system generator
  bool is_level = false;
  HomogeneousIdeal residual_ideal;
};

Aci3Metadata aci3_metadata(const Aci3& spec);

struct BettiSummand {
  int shift;  // R(-shift)
  long multiplicity;
  friend bool operator==(const BettiSummand&, const BettiSummand&) = default;
};

struct BettiTable {
  std::size_t num_vars = 0;
  std::vector<std::vector<BettiSummand>> modules;  // F_0 = R, F_1, ...
  bool minimal = true;
  std::vector<long> hilbert;  // alternating sum, trailing zeros trimmed
};

/// Supported for Irk, Irr and Aci3 / LevelAci; UnsupportedError otherwise.
BettiTable betti_table(const FamilySpec& spec);

/// h(d) = sum_i (-1)^i sum_j mult_ij * binom(d - shift_ij + r - 1, r - 1).
std::vector<long> alternating_sum_hilbert(const BettiTable& table);

enum class ConjectureCase { None, Case1, Case2, Case3 };
std::string to_string(ConjectureCase c);

struct Predicates {
  bool semistable = false;
  bool sum_mod3_zero = false;
  ConjectureCase conjecture_case = ConjectureCase::None;
  std::optional<int> twin_peaks_degree;
};

Predicates predicates(const LevelAci& spec);

/// True iff a+b+c+alpha+beta+gamma = 0 mod 3, the only case in which WLP
/// can fail in characteristic zero.
bool aci3_mod3_obstruction(const Aci3& spec);

/// WLP always holds in characteristic zero when alpha = 0. DomainError if alpha > 0.
bool alpha_zero_wlp(const Aci3& spec);

/// Linear forms singled out for J(r): 2x_1 + x_2 + ... + x_r and
/// t x_1 + x_2 + ... + x_{r-1} - x_r for t = 1..8.
std::vector<HomogeneousPolynomial> jr_special_forms(int r);

/// The special forms when the ideal is recognized as J(r) (same generator
/// list after normalization), otherwise empty.
std::vector<HomogeneousPolynomial> special_forms(const HomogeneousIdeal& ideal);

}  // namespace lefschetz::families
