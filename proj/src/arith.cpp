#include "lefschetz/arith.hpp"

#include <algorithm>
#include <numeric>

#include "lefschetz/errors.hpp"

namespace lefschetz::arith {

namespace {

// Prime used to certify full rank over Q: rank mod p never exceeds rank
// over Q, so a full rank mod p is full rank over Q.
constexpr std::uint64_t kCertificatePrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::vector<std::uint64_t> residues(const ExactMatrix& m, std::uint64_t p) {
  std::vector<std::uint64_t> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i * m.cols() + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
    }
  }
  return out;
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                       std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const std::uint64_t inv = inverse_mod(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = factor * a[r * cols + j] % p;
        a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
      }
    }
    ++r;
  }
  return r;
}

// Fraction-free elimination. Pivot: first column with a nonzero entry in
// the remaining rows, first such row. Returns the rank; when `sign` is
// given it receives the parity of the row swaps.
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols,
                    int* sign = nullptr) {
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  int parity = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(a[pivot * cols + j], a[r * cols + j]);
      parity = -parity;
    }
    const mpz_class& piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class& lead = a[i * cols + c];
      const bool lead_zero = (lead == 0);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& entry = a[i * cols + j];
        const mpz_class& above = a[r * cols + j];
        if (lead_zero || above == 0) {
          if (entry == 0) continue;
          mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), entry.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), entry.get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), above.get_mpz_t());
        }
        mpz_divexact(entry.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
    ++r;
  }
  if (sign != nullptr) *sign = parity;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::of_characteristic(std::uint64_t p) {
  if (p == 0) return FieldSpec();
  if (p >= (1ULL << 31U) || !is_prime(p)) {
    throw DomainError("characteristic must be 0 or a prime below 2^31, got " +
                      std::to_string(p));
  }
  return FieldSpec(p);
}

mpz_class FieldSpec::reduce(const mpz_class& value) const {
  if (p_ == 0) return value;
  return mpz_class(mpz_fdiv_ui(value.get_mpz_t(), p_));
}

mpq_class FieldSpec::reduce(const mpq_class& value) const {
  if (p_ == 0) return value;
  const std::uint64_t den = mpz_fdiv_ui(value.get_den_mpz_t(), p_);
  if (den == 0) {
    throw DomainError("denominator " + value.get_den().get_str() + " vanishes in " + name());
  }
  const std::uint64_t num = mpz_fdiv_ui(value.get_num_mpz_t(), p_);
  return mpq_class(mpz_class(num * inverse_mod(den, p_) % p_));
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::from_rows(FieldSpec field,
                                   const std::vector<std::vector<mpz_class>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field,
                                   std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<mpz_class>> converted;
  for (const auto& r : rows) {
    std::vector<mpz_class> row;
    for (long v : r) row.emplace_back(v);
    converted.push_back(std::move(row));
  }
  return from_rows(field, converted);
}

void ExactMatrix::set(std::size_t i, std::size_t j, const mpz_class& value) {
  data_[i * cols_ + j] = field_.reduce(value);
}

void ExactMatrix::append_row(std::span<const mpz_class> values) {
  if (values.size() != cols_) {
    throw DimensionError("row of length " + std::to_string(values.size()) +
                         " appended to matrix with " + std::to_string(cols_) + " columns");
  }
  for (const auto& v : values) data_.push_back(field_.reduce(v));
  ++rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return t;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> indices) const {
  ExactMatrix out(field_, 0, cols_);
  for (std::size_t i : indices) out.append_row(row(i));
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::size_t full = std::min(m.rows(), m.cols());
  if (!m.field().is_rational()) {
    return rank_mod_p(residues(m, m.field().characteristic()), m.rows(), m.cols(),
                      m.field().characteristic());
  }
  if (rank_mod_p(residues(m, kCertificatePrime), m.rows(), m.cols(), kCertificatePrime) ==
      full) {
    return full;
  }
  std::vector<mpz_class> work(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(),
              work.begin() + static_cast<std::ptrdiff_t>(i * m.cols()));
  }
  return bareiss(work, m.rows(), m.cols());
}

mpz_class det_integer(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  if (!m.field().is_rational()) {
    throw DomainError("det_integer needs an integer matrix, got entries in " + m.field().name());
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> work;
  work.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : m.row(i)) work.push_back(v);
  }
  int sign = 1;
  if (bareiss(work, n, n, &sign) < n) return 0;
  return sign * work[n * n - 1];
}

std::vector<std::vector<mpq_class>> nullspace(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const FieldSpec& field = m.field();
  std::vector<mpq_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  }
  // Gauss-Jordan to reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) swap(a[pivot * cols + j], a[r * cols + j]);
    const mpq_class inv = field.reduce(mpq_class(1) / a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      a[r * cols + j] = field.reduce(mpq_class(a[r * cols + j] * inv));
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      const mpq_class factor = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = field.reduce(mpq_class(a[i * cols + j] - factor * a[r * cols + j]));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v[pivot_cols[k]] = field.reduce(mpq_class(-a[k * cols + free]));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class gcd_of_maximal_minors(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows < cols) {
    throw DimensionError("maximal minors need rows >= cols, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  if (cols > 28 || binomial(static_cast<long>(rows), static_cast<long>(cols)) > 10000) {
    throw CapacityError("maximal-minor enumeration beyond desk scale (" + std::to_string(rows) +
                        "x" + std::to_string(cols) + ")");
  }
  // Enumerate row subsets in lexicographic order.
  std::vector<std::size_t> pick(cols);
  std::iota(pick.begin(), pick.end(), 0);
  mpz_class g = 0;
  while (true) {
    const mpz_class d = det_integer(m.select_rows(pick));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    std::size_t i = cols;
    while (i > 0 && pick[i - 1] == rows - cols + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < cols; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

}  // namespace lefschetz::arith
