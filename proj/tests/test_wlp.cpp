#include <doctest.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/families.hpp"
#include "lefschetz/wlp.hpp"
#include "oracles.hpp"

using namespace lefschetz;
using algebra::HomogeneousIdeal;
using algebra::HomogeneousPolynomial;
using arith::FieldSpec;
namespace fam = families;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

HomogeneousIdeal parse(const std::string& s) { return algebra::parse_ideal(s, xyz, FieldSpec::rationals()); }
HomogeneousPolynomial poly(const std::string& s) { return algebra::parse_polynomial(s, xyz, FieldSpec::rationals()); }

std::vector<fam::FamilySpec> small_family_instances() {
  std::vector<fam::FamilySpec> out;
  for (int k = 2; k <= 4; ++k)
    for (int d = 2; d <= 3; ++d) out.push_back(fam::Irkd{3, k, d});
  out.push_back(fam::Irkd{4, 2, 2});
  out.push_back(fam::Irkd{4, 2, 3});
  out.push_back(fam::Irkd{4, 3, 2});
  out.push_back(fam::Irk{3, 2});
  out.push_back(fam::Irk{3, 4});
  out.push_back(fam::Irr{3});
  out.push_back(fam::Jr{3});
  out.push_back(fam::Aci3{3, 4, 4, 1, 1, 2});
  out.push_back(fam::Aci3{4, 4, 4, 0, 2, 2});
  out.push_back(fam::LevelAci{1, 1, 1, 2});
  out.push_back(fam::LevelAci{1, 2, 3, 2});
  out.push_back(fam::Injn{2, fam::InjnVariant::Power, 0});
  out.push_back(fam::Injn{2, fam::InjnVariant::General, 5});
  return out;
}

std::vector<wlp::DegreeReport> strip(std::vector<wlp::DegreeReport> rs) {
  for (auto& r : rs) r.inferred = false;
  return rs;
}

}  // namespace

TEST_CASE("degree report ranks agree with the full-slice oracle") {
  wlp::FormSampler sampler(17);
  auto specs = small_family_instances();
  for (fam::FamilySpec extra : {fam::FamilySpec{fam::Irkd{4, 3, 3}}, fam::FamilySpec{fam::Irkd{4, 4, 2}},
                                fam::FamilySpec{fam::Irk{4, 3}}, fam::FamilySpec{fam::Irr{4}}, fam::FamilySpec{fam::Jr{4}},
                                fam::FamilySpec{fam::Injn{3, fam::InjnVariant::Power, 0}},
                                fam::FamilySpec{fam::Injn{3, fam::InjnVariant::General, 1}}})
    specs.push_back(extra);
  for (const auto& spec : specs) {
    const auto ideal = fam::make_ideal(spec);
    for (std::uint64_t p : {0ULL, 2ULL, 3ULL}) {
      const auto field = FieldSpec::of_characteristic(p);
      const oracle::FullSlice full(ideal, p);
      for (const auto& l : {HomogeneousPolynomial::all_ones(ideal.num_vars()), sampler.next(ideal.num_vars(), field)}) {
        const auto reports = wlp::degree_reports(ideal, l, field, false);
        INFO(fam::describe(spec), " char ", p, " L = ", l.to_string());
        for (const auto& r : reports) {
          CHECK_FALSE(r.inferred);
          CHECK(r.h_d == full.hilbert(r.d));
          CHECK(r.rank == full.mult_rank(l, r.d));
          CHECK(r.rank <= std::min(r.h_d, r.h_d1));
          CHECK(r.injective == (r.rank == r.h_d));
          CHECK(r.surjective == (r.rank == r.h_d1));
          CHECK(r.maximal == (r.injective || r.surjective));
        }
      }
    }
  }
}

TEST_CASE("mult_map_rank on random ideals against the oracle") {
  oracle::Gen gen(404);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = static_cast<std::size_t>(gen.between(2, 3));
    const auto ideal = trial % 3 ? gen.mixed_ideal(r, 3) : gen.monomial_ideal(r, 4, 2);
    const std::uint64_t p = trial % 2 ? 0 : 5;
    const auto field = FieldSpec::of_characteristic(p);
    const auto h = algebra::hilbert_profile(ideal, field);
    const oracle::FullSlice full(ideal, p);
    const auto l = gen.linear_nonzero(r);
    for (int d = 0; d <= h.socle_degree(); ++d) {
      const auto m = wlp::mult_map_rank(ideal, l, d, field);
      CHECK(m.h_source == h.at(d));
      CHECK(m.h_target == h.at(d + 1));
      CHECK(m.rank == full.mult_rank(l, d));
    }
  }
}

TEST_CASE("level shortcut matches the full scan") {
  oracle::Gen gen(99);
  std::vector<HomogeneousIdeal> ideals;
  for (const auto& spec : small_family_instances()) ideals.push_back(fam::make_ideal(spec));
  for (int i = 0; i < 30; ++i) ideals.push_back(gen.monomial_ideal(3, 5, static_cast<int>(gen.between(0, 3))));
  for (int i = 0; i < 10; ++i) ideals.push_back(gen.mixed_ideal(3, 3));
  wlp::FormSampler sampler(3);
  for (const auto& ideal : ideals) {
    for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 7ULL}) {
      const auto field = FieldSpec::of_characteristic(p);
      const auto l = p == 7 ? sampler.next(ideal.num_vars(), field) : HomogeneousPolynomial::all_ones(ideal.num_vars());
      const auto fast = wlp::degree_reports(ideal, l, field, true);
      const auto slow = wlp::degree_reports(ideal, l, field, false);
      CHECK(strip(fast) == slow);
    }
  }
}

TEST_CASE("cokernel duality") {
  oracle::Gen gen(123);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ideal = trial % 2 ? gen.mixed_ideal(3, 3) : gen.monomial_ideal(3, 5, 2);
    const auto l = gen.linear_nonzero(3);
    const auto h = algebra::hilbert_profile(ideal);
    const auto restricted = algebra::hilbert_profile(algebra::restrict_modulo_linear(ideal, l, 2));
    for (int d = 0; d <= h.socle_degree(); ++d) {
      const auto m = wlp::mult_map_rank(ideal, l, d, FieldSpec::rationals());
      CHECK(m.h_target - m.rank == restricted.at(d + 1));
    }
  }
}

TEST_CASE("monomial multiplication matrices live in the prime field") {
  const auto ideal = fam::make_ideal(fam::Irk{3, 4});
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    const auto field = FieldSpec::of_characteristic(p);
    const auto h = algebra::hilbert_profile(ideal, field);
    for (int d = 0; d < h.socle_degree(); ++d) {
      const auto m = wlp::multiplication_matrix(ideal, HomogeneousPolynomial::all_ones(3), d, field);
      CHECK(m.rows() == h.at(d));
      CHECK(m.cols() == h.at(d + 1));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& v : m.row(i)) CHECK((v >= 0 && v < static_cast<long>(p)));
      CHECK(arith::rank(m) == wlp::mult_map_rank(ideal, HomogeneousPolynomial::all_ones(3), d, field).rank);
    }
  }
  CHECK_THROWS_AS(wlp::multiplication_matrix(parse("x^2, y^2, z^2 - x*y"), poly("x + y + z"), 0, FieldSpec::rationals()),
                  UnsupportedError);
}

TEST_CASE("verdicts") {
  // the complete intersection (x^2, y^2, z^2) has WLP in odd characteristic
  const auto ci = parse("x^2, y^2, z^2");
  const auto q = wlp::wlp_check(ci, FieldSpec::rationals());
  CHECK(q.has_wlp);
  CHECK(q.conclusive);
  CHECK(q.failure_degrees.empty());
  CHECK(q.forms_tried == 1);
  const auto two = wlp::wlp_check(ci, FieldSpec::of_characteristic(2));
  CHECK_FALSE(two.has_wlp);
  CHECK(two.conclusive);
  CHECK(two.failure_degrees == std::vector<int>{1});

  const auto irr3 = fam::make_ideal(fam::Irr{3});
  const auto v = wlp::wlp_check(irr3, FieldSpec::rationals());
  CHECK(v.failure_degrees == std::vector<int>{2});
  for (const auto& r : v.reports) CHECK(r.maximal == (r.d != 2));
}

TEST_CASE("strategies on a non-monomial ideal") {
  const auto jr3 = fam::make_ideal(fam::Jr{3});
  const auto f3 = FieldSpec::of_characteristic(3);

  wlp::WlpOptions random;
  random.strategy = wlp::Strategy::SeededRandom;
  random.trials = 3;
  const auto rv = wlp::wlp_check(jr3, f3, random);
  CHECK_FALSE(rv.has_wlp);
  CHECK_FALSE(rv.conclusive);  // random forms alone never prove failure
  CHECK(rv.forms_tried == 4);

  wlp::WlpOptions staged;
  staged.strategy = wlp::Strategy::FamilyForms;
  staged.special_forms = fam::special_forms(jr3);
  CHECK(staged.special_forms.size() == 9);
  const auto pv = wlp::wlp_check(jr3, f3, staged);
  CHECK_FALSE(pv.has_wlp);
  CHECK(pv.conclusive);

  const auto q = wlp::wlp_check(jr3, FieldSpec::rationals(), staged);
  CHECK(q.has_wlp);
  CHECK(q.conclusive);

  wlp::WlpOptions given;
  given.strategy = wlp::Strategy::Explicit;
  given.form = poly("x + y");
  const auto ev = wlp::wlp_check(parse("x^2, y^2, z^2"), FieldSpec::rationals(), given);
  CHECK_FALSE(ev.has_wlp);  // x + y misses z
  CHECK_FALSE(ev.conclusive);
  CHECK(ev.form_used == poly("x + y"));

  given.form = poly("x^2");
  CHECK_THROWS_AS(wlp::wlp_check(jr3, FieldSpec::rationals(), given), DomainError);
  given.form = algebra::parse_polynomial("x + y", {"x", "y"}, FieldSpec::rationals());
  CHECK_THROWS_AS(wlp::wlp_check(jr3, FieldSpec::rationals(), given), DimensionError);
  given.form = poly("3*x + 3*y");
  CHECK_THROWS_AS(wlp::wlp_check(jr3, f3, given), DomainError);
}

TEST_CASE("form sampler is reproducible and avoids zero coefficients") {
  for (std::uint64_t seed : std::vector<std::uint64_t>{0, 1, wlp::kDefaultSeed}) {
    wlp::FormSampler a(seed), b(seed);
    for (int i = 0; i < 50; ++i) {
      const auto field = FieldSpec::of_characteristic(i % 2 ? 3 : 0);
      const auto fa = a.next(4, field);
      CHECK(fa == b.next(4, field));
      CHECK(fa.terms().size() == 4);
      for (const auto& [m, c] : fa.terms()) {
        CHECK(c != 0);
        CHECK(abs(c) <= 100);
        if (i % 2) CHECK(c.get_num() % 3 != 0);
      }
    }
  }
  wlp::FormSampler s(7);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const long v = s.uniform(-3, 3);
    REQUIRE((v >= -3 && v <= 3));
    ++hits[static_cast<std::size_t>(v + 3)];
  }
  for (int h : hits) CHECK((h > 800 && h < 1200));
}

TEST_CASE("kernel witnesses re-verify") {
  oracle::Gen gen(55);
  std::vector<HomogeneousIdeal> ideals;
  for (const auto& spec : small_family_instances()) ideals.push_back(fam::make_ideal(spec));
  for (int i = 0; i < 15; ++i) ideals.push_back(gen.mixed_ideal(3, 3));
  int found = 0;
  for (const auto& ideal : ideals) {
    for (std::uint64_t p : {0ULL, 2ULL, 3ULL}) {
      const auto field = FieldSpec::of_characteristic(p);
      const auto l = HomogeneousPolynomial::all_ones(ideal.num_vars());
      const auto h = algebra::hilbert_profile(ideal, field);
      for (int d = 0; d <= h.socle_degree(); ++d) {
        const auto w = wlp::kernel_witness(ideal, field, d);
        const auto m = wlp::mult_map_rank(ideal, l, d, field);
        CHECK(w.has_value() == (m.rank < m.h_source));
        if (!w) continue;
        ++found;
        CHECK(w->degree() == d);
        CHECK(wlp::verify_kernel_element(ideal, *w, l, field));
        CHECK(w->terms().begin()->second == 1);
        // independent membership test with the oracle
        const oracle::FullSlice full(ideal, p);
        CHECK(full.mult_rank(l, d) < full.hilbert(d));
      }
    }
  }
  CHECK(found > 20);
  const auto w = wlp::kernel_witness(fam::make_ideal(fam::Irr{3}), FieldSpec::rationals(), 2);
  REQUIRE(w);
  CHECK(*w == poly("x^2 - x*y - x*z + y^2 - y*z + z^2"));
  CHECK_FALSE(wlp::verify_kernel_element(parse("x^2, y^2, z^2"), poly("x*y"), poly("x + y + z"), FieldSpec::rationals()));
}
