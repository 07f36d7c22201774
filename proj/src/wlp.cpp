#include "lefschetz/wlp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "lefschetz/errors.hpp"

namespace lefschetz::wlp {

using algebra::DegreeSlice;
using algebra::Monomial;

namespace {

bool zero_row(const std::vector<mpz_class>& row) {
  return std::all_of(row.begin(), row.end(), [](const mpz_class& v) { return v == 0; });
}

class SliceCache {
 public:
  SliceCache(const HomogeneousIdeal& ideal, const FieldSpec& field) : ideal_(ideal), field_(field) {}

  const DegreeSlice& at(int d) {
    auto it = slices_.find(d);
    if (it == slices_.end()) it = slices_.emplace(d, algebra::degree_slice(ideal_, d, field_)).first;
    return it->second;
  }

  MultMapRank map_rank(const HomogeneousPolynomial& form, int d) {
    const DegreeSlice& source = at(d);
    const DegreeSlice& target = at(d + form.degree());
    MultMapRank out{source.dimension(), target.dimension(), 0};
    if (out.h_source == 0 || out.h_target == 0) return out;
    arith::ExactMatrix stacked = target.relations;
    for (const auto& m : source.basis) stacked.append_row(target.coordinates(form * m, field_));
    out.rank = arith::rank(stacked) - target.relation_rank;
    return out;
  }

 private:
  const HomogeneousIdeal& ideal_;
  FieldSpec field_;
  std::map<int, DegreeSlice> slices_;
};

DegreeReport make_report(int d, std::size_t h_d, std::size_t h_d1, std::size_t rank) {
  DegreeReport r;
  r.d = d;
  r.h_d = h_d;
  r.h_d1 = h_d1;
  r.rank = rank;
  r.injective = rank == h_d;
  r.surjective = rank == h_d1;
  r.maximal = r.injective || r.surjective;
  return r;
}

void check_linear(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& form,
                  const FieldSpec& field) {
  if (form.num_vars() != ideal.num_vars()) {
    throw DimensionError("linear form in " + std::to_string(form.num_vars()) +
                         " variables for an ideal in " + std::to_string(ideal.num_vars()));
  }
  if (form.degree() != 1) {
    throw DomainError("form of degree " + std::to_string(form.degree()) + " given; need a linear form");
  }
  if (form.reduced(field).is_zero()) throw DomainError("linear form vanishes in " + field.name());
}

}  // namespace

MultMapRank mult_map_rank(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& form, int d,
                          const FieldSpec& field) {
  if (form.num_vars() != ideal.num_vars()) throw DimensionError("form and ideal live in different rings");
  if (!algebra::is_artinian(ideal, field)) throw NotArtinianError("not Artinian over " + field.name());
  SliceCache cache(ideal, field);
  return cache.map_rank(form.reduced(field), d);
}

arith::ExactMatrix multiplication_matrix(const HomogeneousIdeal& ideal,
                                         const HomogeneousPolynomial& form, int d,
                                         const FieldSpec& field) {
  if (!ideal.is_monomial()) throw UnsupportedError("multiplication matrix needs a monomial ideal");
  if (form.num_vars() != ideal.num_vars()) throw DimensionError("form and ideal live in different rings");
  const DegreeSlice source = algebra::degree_slice(ideal, d, field);
  const DegreeSlice target = algebra::degree_slice(ideal, d + form.degree(), field);
  arith::ExactMatrix m(field, 0, target.basis.size());
  const HomogeneousPolynomial f = form.reduced(field);
  for (const auto& b : source.basis) m.append_row(target.coordinates(f * b, field));
  return m;
}

namespace {

std::vector<DegreeReport> reports_with_cache(SliceCache& cache, const HomogeneousIdeal& ideal,
                                             const algebra::HilbertProfile& profile,
                                             const HomogeneousPolynomial& form, bool level_shortcut) {
  const int top = profile.socle_degree();
  std::vector<std::optional<DegreeReport>> reports(static_cast<std::size_t>(std::max(top + 1, 0)));
  auto compute = [&](int d) -> const DegreeReport& {
    auto& slot = reports[static_cast<std::size_t>(d)];
    if (!slot) {
      const std::size_t h_d = profile.at(d);
      const std::size_t h_d1 = profile.at(d + 1);
      const std::size_t rank = h_d == 0 || h_d1 == 0 ? 0 : cache.map_rank(form, d).rank;
      slot = make_report(d, h_d, h_d1, rank);
    }
    return *slot;
  };

  bool complete = false;
  if (level_shortcut && top >= 0) {
    int d0 = 0;
    while (profile.at(d0) < profile.at(d0 + 1)) ++d0;
    // Surjectivity propagates upward in any standard graded algebra;
    // injectivity propagates downward when the socle sits in one degree.
    const bool level = ideal.is_monomial() && algebra::socle_report(ideal).is_level;
    bool ok = compute(d0).surjective;
    if (level) {
      if (d0 > 0) ok = ok && compute(d0 - 1).injective;
    } else {
      for (int d = 0; d < d0 && ok; ++d) ok = compute(d).injective;
    }
    if (ok) {
      for (int d = 0; d <= top; ++d) {
        auto& slot = reports[static_cast<std::size_t>(d)];
        if (slot) continue;
        const std::size_t h_d = profile.at(d);
        const std::size_t h_d1 = profile.at(d + 1);
        slot = make_report(d, h_d, h_d1, d < d0 ? h_d : h_d1);
        slot->inferred = true;
      }
      complete = true;
    }
  }
  if (!complete) {
    for (int d = 0; d <= top; ++d) compute(d);
  }
  std::vector<DegreeReport> out;
  for (auto& r : reports) out.push_back(*r);
  return out;
}

}  // namespace

std::vector<DegreeReport> degree_reports(const HomogeneousIdeal& ideal,
                                         const HomogeneousPolynomial& linear_form,
                                         const FieldSpec& field, bool level_shortcut) {
  check_linear(ideal, linear_form, field);
  const algebra::HilbertProfile profile = algebra::hilbert_profile(ideal, field);
  SliceCache cache(ideal, field);
  return reports_with_cache(cache, ideal, profile, linear_form.reduced(field), level_shortcut);
}

FormSampler::FormSampler(std::uint64_t seed) : engine_(seed) {}

long FormSampler::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t u;
  do {
    u = engine_();
  } while (u >= limit);
  return lo + static_cast<long>(u % span);
}

HomogeneousPolynomial FormSampler::next(std::size_t num_vars, const FieldSpec& field) {
  std::vector<mpq_class> coefficients;
  for (std::size_t i = 0; i < num_vars; ++i) {
    long c;
    do {
      c = uniform(-100, 99);
      if (c >= 0) ++c;  // skip 0
    } while (!field.is_rational() && c % static_cast<long>(field.characteristic()) == 0);
    coefficients.emplace_back(c);
  }
  return HomogeneousPolynomial::linear(coefficients);
}

WlpVerdict wlp_check(const HomogeneousIdeal& ideal, const FieldSpec& field,
                     const WlpOptions& options) {
  const algebra::HilbertProfile profile = algebra::hilbert_profile(ideal, field);
  const std::size_t r = ideal.num_vars();

  std::vector<HomogeneousPolynomial> forms;
  bool failure_conclusive = false;
  if (options.strategy == Strategy::Explicit) {
    if (!options.form) throw DomainError("explicit strategy needs a linear form");
    check_linear(ideal, *options.form, field);
    forms.push_back(*options.form);
  } else if (ideal.is_monomial()) {
    forms.push_back(HomogeneousPolynomial::all_ones(r));
    failure_conclusive = true;
  } else {
    forms.push_back(HomogeneousPolynomial::all_ones(r));
    if (options.strategy == Strategy::FamilyForms) {
      for (const auto& f : options.special_forms) {
        check_linear(ideal, f, field);
        forms.push_back(f);
      }
      failure_conclusive = !options.special_forms.empty();
    }
    if (options.strategy == Strategy::SeededRandom || options.strategy == Strategy::FamilyForms) {
      FormSampler sampler(options.seed);
      for (std::size_t i = 0; i < options.trials; ++i) forms.push_back(sampler.next(r, field));
    }
  }

  SliceCache cache(ideal, field);
  WlpVerdict best;
  best.field = field;
  std::size_t best_failures = std::numeric_limits<std::size_t>::max();
  std::size_t tried = 0;
  for (const auto& raw : forms) {
    const HomogeneousPolynomial form = raw.reduced(field);
    if (form.is_zero()) continue;
    ++tried;
    WlpVerdict v;
    v.field = field;
    v.form_used = form;
    v.reports = reports_with_cache(cache, ideal, profile, form, options.level_shortcut);
    for (const auto& rep : v.reports) {
      if (!rep.maximal) v.failure_degrees.push_back(rep.d);
    }
    v.has_wlp = v.failure_degrees.empty();
    if (v.has_wlp) {
      v.conclusive = true;
      v.forms_tried = tried;
      return v;
    }
    if (v.failure_degrees.size() < best_failures) {
      best_failures = v.failure_degrees.size();
      best = std::move(v);
    }
  }
  best.conclusive = failure_conclusive;
  best.forms_tried = tried;
  return best;
}

std::optional<HomogeneousPolynomial> kernel_witness(
    const HomogeneousIdeal& ideal, const FieldSpec& field, int d,
    const std::optional<HomogeneousPolynomial>& linear_form) {
  const HomogeneousPolynomial form =
      linear_form ? *linear_form : HomogeneousPolynomial::all_ones(ideal.num_vars());
  check_linear(ideal, form, field);
  if (!algebra::is_artinian(ideal, field)) throw NotArtinianError("not Artinian over " + field.name());
  const HomogeneousPolynomial L = form.reduced(field);
  const DegreeSlice source = algebra::degree_slice(ideal, d, field);
  if (source.dimension() == 0) return std::nullopt;
  const DegreeSlice target = algebra::degree_slice(ideal, d + 1, field);

  // Rows: L*m for the source basis, then the target relations. A left null
  // vector restricted to the first block is a kernel element.
  arith::ExactMatrix stacked(field, 0, target.basis.size());
  for (const auto& m : source.basis) stacked.append_row(target.coordinates(L * m, field));
  for (std::size_t i = 0; i < target.relations.rows(); ++i) stacked.append_row(target.relations.row(i));

  for (const auto& v : arith::nullspace(stacked.transpose())) {
    HomogeneousPolynomial f(ideal.num_vars(), d);
    for (std::size_t i = 0; i < source.basis.size(); ++i) f.add_term(source.basis[i], v[i]);
    f = f.reduced(field);
    if (f.is_zero()) continue;
    const auto row = source.coordinates(f, field);
    if (zero_row(row)) continue;
    arith::ExactMatrix extended = source.relations;
    extended.append_row(row);
    if (arith::rank(extended) == source.relation_rank) continue;  // f lies in I
    f = f.normalized(field);
    if (!verify_kernel_element(ideal, f, L, field)) {
      throw std::logic_error("kernel witness failed re-verification");
    }
    return f;
  }
  return std::nullopt;
}

bool verify_kernel_element(const HomogeneousIdeal& ideal, const HomogeneousPolynomial& f,
                           const HomogeneousPolynomial& linear_form, const FieldSpec& field) {
  const HomogeneousPolynomial g = f.reduced(field);
  if (g.is_zero()) return false;
  return !algebra::in_ideal(ideal, g, field) &&
         algebra::in_ideal(ideal, (linear_form.reduced(field) * g).reduced(field), field);
}

}  // namespace lefschetz::wlp
