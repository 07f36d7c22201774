#pragma once

// Exact scalar and matrix arithmetic over Q and prime fields.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz::arith {

/// Ground field: characteristic 0 (exact rationals) or a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws DomainError unless p is 0 or a prime below 2^31.
  static FieldSpec of_characteristic(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  /// Canonical representative: the value itself over Q, the residue in
  /// [0, p) over F_p. Throws DomainError if a denominator vanishes mod p.
  mpq_class reduce(const mpq_class& value) const;
  mpz_class reduce(const mpz_class& value) const;

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Dense matrix with entries in the attached field. Over Q the entries are
/// integers (rational rows are brought to integer form by the builders,
/// which scale rows and therefore preserve rank); over F_p they are
/// residues in [0, p).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static ExactMatrix from_rows(FieldSpec field,
                               const std::vector<std::vector<mpz_class>>& rows);
  static ExactMatrix from_rows(FieldSpec field,
                               std::initializer_list<std::initializer_list<long>> rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const mpz_class& value);

  std::span<const mpz_class> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  /// Appends a row of length cols(); entries are reduced into the field.
  void append_row(std::span<const mpz_class> values);

  ExactMatrix transpose() const;
  ExactMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Rank over the attached field.
std::size_t rank(const ExactMatrix& m);

/// Determinant of a square integer matrix by Bareiss elimination.
mpz_class det_integer(const ExactMatrix& m);

/// Basis of {v : m v = 0}. Over Q the vectors are rational, over F_p they
/// hold residues. Each basis vector has a 1 in its free column.
std::vector<std::vector<mpq_class>> nullspace(const ExactMatrix& m);

/// gcd of all cols x cols minors (absolute value); 0 when they all vanish.
/// Throws CapacityError beyond desk scale: cols <= 28 and
/// binom(rows, cols) <= 10^4.
mpz_class gcd_of_maximal_minors(const ExactMatrix& m);

struct Factorization {
  std::vector<std::pair<mpz_class, unsigned>> factors;  // ascending primes
  mpz_class cofactor = 1;  // unfactored part of |n| (1 when complete)
  bool complete() const { return cofactor == 1; }
  mpz_class reassemble() const;
};

inline constexpr unsigned long kTrialDivisionBound = 1'000'000;

/// Factorization of |n| by trial division up to kTrialDivisionBound.
/// Throws DomainError for n = 0.
Factorization factor(const mpz_class& n);

mpz_class binomial(long n, long k);

}  // namespace lefschetz::arith
