#include <doctest.h>

#include <algorithm>
#include <set>

#include "lefschetz/criterion.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/families.hpp"
#include "lefschetz/wlp.hpp"
#include "oracles.hpp"

using namespace lefschetz;
using algebra::HomogeneousPolynomial;
using arith::FieldSpec;
namespace fam = families;

namespace {

std::vector<long> as_long(const algebra::HilbertProfile& h) { return {h.values.begin(), h.values.end()}; }

std::vector<fam::Aci3> aci3_grid(int max_param) {
  std::vector<fam::Aci3> out;
  for (int a = 1; a <= max_param; ++a)
    for (int b = 1; b <= max_param; ++b)
      for (int c = 1; c <= max_param; ++c)
        for (int al = 0; al < a; ++al)
          for (int be = 0; be < b; ++be)
            for (int ga = 0; ga < c; ++ga)
              if ((al > 0) + (be > 0) + (ga > 0) >= 2) out.push_back({a, b, c, al, be, ga});
  return out;
}

}  // namespace

TEST_CASE("validation names the violated constraint") {
  auto message = [](const fam::FamilySpec& s) -> std::string {
    try {
      fam::validate(s);
    } catch (const DomainError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message(fam::Irkd{3, 1, 2}).find("k >= 2") != std::string::npos);
  CHECK(message(fam::Irkd{3, 3, 4}).find("2 <= d <= r") != std::string::npos);
  CHECK(message(fam::Irr{1}).find("r >= 2") != std::string::npos);
  CHECK(message(fam::Aci3{3, 3, 3, 3, 1, 1}).find("alpha") != std::string::npos);
  CHECK(!message(fam::Aci3{3, 3, 3, 1, 0, 0}).empty());  // a complete intersection
  CHECK(message(fam::LevelAci{2, 1, 3, 2}).find("alpha <= beta") != std::string::npos);
  CHECK(message(fam::LevelAci{1, 1, 1, 0}).find("t >= 1") != std::string::npos);
  CHECK(message(fam::Irkd{3, 3, 3}).empty());
  CHECK_THROWS_AS(fam::make_ideal(fam::Jr{1}), DomainError);
}

TEST_CASE("describe and generators") {
  CHECK(fam::describe(fam::Irkd{3, 3, 3}) == "I(3,3,3)");
  CHECK(fam::describe(fam::Jr{4}) == "J(4)");
  CHECK(fam::describe(fam::Aci3{3, 3, 3, 1, 1, 1}) == "ACI(3,3,3;1,1,1)");
  CHECK(fam::num_variables(fam::Injn{3, fam::InjnVariant::Power, 0}) == 4);
  CHECK(fam::make_ideal(fam::Irkd{3, 3, 3}).to_string() == "(x^3, y^3, z^3, x*y*z)");
  CHECK(fam::make_ideal(fam::Irkd{4, 2, 2}).generators().size() == 4 + 6);
  CHECK(fam::make_ideal(fam::Jr{3}).to_string() == "(x^3, y^3, z^3, x^2*y + x*y*z)");
  CHECK(fam::make_ideal(fam::Irr{3}).to_string() == fam::make_ideal(fam::Irk{3, 3}).to_string());
  const auto level = fam::as_aci3(fam::LevelAci{1, 2, 3, 4});
  CHECK(level.a == 5);
  CHECK(level.b == 6);
  CHECK(level.c == 7);
  // Jr mod 2 keeps all generators; a generator vanishing in the field is dropped
  CHECK(fam::make_ideal(fam::Jr{3}, FieldSpec::of_characteristic(2)).generators().size() == 4);
  const auto pw = fam::make_ideal(fam::Injn{2, fam::InjnVariant::Power, 0});
  CHECK(pw.generators().back() == HomogeneousPolynomial::all_ones(4).pow(2));
  const auto g1 = fam::make_ideal(fam::Injn{3, fam::InjnVariant::General, 9});
  const auto g2 = fam::make_ideal(fam::Injn{3, fam::InjnVariant::General, 9});
  const auto g3 = fam::make_ideal(fam::Injn{3, fam::InjnVariant::General, 10});
  CHECK(g1.to_string() == g2.to_string());
  CHECK(g1.to_string() != g3.to_string());
  const auto& general = g1.generators().back();
  CHECK(general.terms().size() == 20);
  for (const auto& [m, c] : general.terms()) CHECK((c != 0 && abs(c) <= 50));
}

TEST_CASE("J(r) and I(r,r) share their Hilbert function") {
  for (int r = 3; r <= 5; ++r)
    CHECK(algebra::hilbert_profile(fam::make_ideal(fam::Jr{r})) == algebra::hilbert_profile(fam::make_ideal(fam::Irr{r})));
}

TEST_CASE("twin peaks") {
  int tested = 0;
  for (int al = 1; al <= 10; ++al)
    for (int be = al; be <= 10; ++be)
      for (int ga = be; ga <= 2 * (al + be); ++ga) {
        const int sum = al + be + ga;
        if (sum > 12 || sum % 3) continue;
        const int lo = std::max((2 * ga - al - be + 2) / 3, sum / 3);
        for (int t = std::max(lo, 1); t <= lo + 4; ++t) {
          const auto p = fam::predicates(fam::LevelAci{al, be, ga, t});
          REQUIRE(p.twin_peaks_degree);
          const auto h = algebra::hilbert_profile(fam::make_ideal(fam::LevelAci{al, be, ga, t}));
          CHECK(h.at(*p.twin_peaks_degree) == h.at(*p.twin_peaks_degree + 1));
          CHECK(h.at(*p.twin_peaks_degree) == *std::max_element(h.values.begin(), h.values.end()));
          ++tested;
        }
      }
  CHECK(tested > 50);
}

TEST_CASE("predicates") {
  const auto p = fam::predicates(fam::LevelAci{3, 3, 3, 7});
  CHECK(p.semistable);
  CHECK(p.sum_mod3_zero);
  CHECK(p.twin_peaks_degree == 11);
  CHECK(fam::predicates(fam::LevelAci{1, 1, 2, 2}).twin_peaks_degree == std::nullopt);
  CHECK_FALSE(fam::predicates(fam::LevelAci{1, 1, 5, 3}).semistable);
  CHECK(fam::predicates(fam::LevelAci{2, 2, 5, 4}).conjecture_case == fam::ConjectureCase::Case1);
  CHECK(fam::predicates(fam::LevelAci{1, 1, 1, 2}).conjecture_case == fam::ConjectureCase::Case2);
  CHECK(fam::predicates(fam::LevelAci{1, 4, 4, 4}).conjecture_case == fam::ConjectureCase::Case3);
  CHECK(fam::predicates(fam::LevelAci{2, 2, 2, 3}).conjecture_case == fam::ConjectureCase::None);
  CHECK(fam::to_string(fam::ConjectureCase::Case2) == "case2");

  // every classified tuple has a vanishing determinant
  for (int al = 1; al <= 6; ++al)
    for (int be = al; be <= 10; ++be)
      for (int ga = be; ga <= 2 * (al + be); ++ga) {
        const int sum = al + be + ga;
        if (sum > 12 || sum % 3) continue;
        for (int t = sum / 3; t <= sum / 3 + 4; ++t) {
          if (!criterion::hypotheses_ok(al, be, ga, t)) continue;
          if (fam::predicates(fam::LevelAci{al, be, ga, t}).conjecture_case == fam::ConjectureCase::None) continue;
          CHECK(criterion::criterion_report(al, be, ga, t).det == 0);
        }
      }
}

TEST_CASE("ACI failures need the sum to vanish mod 3; alpha = 0 has WLP") {
  std::size_t failures = 0;
  for (const auto& s : aci3_grid(4)) {
    const auto v = wlp::wlp_check(fam::make_ideal(s), FieldSpec::rationals());
    CHECK(v.conclusive);
    if (!v.has_wlp) {
      ++failures;
      CHECK(fam::aci3_mod3_obstruction(s));
    }
    if (s.alpha == 0) {
      CHECK(fam::alpha_zero_wlp(s));
      CHECK(v.has_wlp);
    } else {
      CHECK_THROWS_AS(fam::alpha_zero_wlp(s), DomainError);
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("inverse system equals the socle") {
  for (const auto& s : aci3_grid(4)) {
    const auto ideal = fam::make_ideal(s);
    const auto meta = fam::aci3_metadata(s);
    const auto socle = algebra::socle_report(ideal);
    std::set<std::vector<int>> a, b;
    for (const auto& m : meta.inverse_system) a.insert(m.exponents());
    for (const auto& m : socle.socle_monomials) b.insert(m.exponents());
    CHECK(a == b);
    CHECK(static_cast<std::size_t>(meta.cm_type) == socle.cm_type);
    CHECK(meta.is_level == socle.is_level);
    std::set<int> degs(meta.socle_degrees.begin(), meta.socle_degrees.end());
    CHECK(std::vector<int>(degs.begin(), degs.end()) == socle.socle_degrees);
  }
  const auto meta = fam::aci3_metadata({4, 4, 4, 1, 1, 1});
  CHECK(meta.cm_type == 3);
  CHECK(meta.is_level);
  CHECK(meta.residual_ideal.num_vars() == 3);
}

TEST_CASE("Betti tables reproduce the Hilbert function") {
  for (int r = 2; r <= 5; ++r)
    for (int k = 2; k <= 5; ++k) {
      const fam::FamilySpec spec = fam::Irk{r, k};
      const auto table = fam::betti_table(spec);
      CHECK(table.modules.front() == std::vector<fam::BettiSummand>{{0, 1}});
      CHECK(table.modules.size() == static_cast<std::size_t>(r) + 1);
      CHECK(table.hilbert == fam::alternating_sum_hilbert(table));
      CHECK(table.hilbert == as_long(algebra::hilbert_profile(fam::make_ideal(spec))));
    }
  for (const auto& s : aci3_grid(4)) {
    const auto table = fam::betti_table(s);
    CHECK(table.hilbert == as_long(algebra::hilbert_profile(fam::make_ideal(s))));
    for (const auto& mod : table.modules)
      for (std::size_t i = 1; i < mod.size(); ++i) CHECK(mod[i - 1].shift < mod[i].shift);
  }
  CHECK(fam::betti_table(fam::LevelAci{1, 1, 1, 3}).hilbert ==
        as_long(algebra::hilbert_profile(fam::make_ideal(fam::LevelAci{1, 1, 1, 3}))));
  CHECK_THROWS_AS(fam::betti_table(fam::Jr{3}), UnsupportedError);
}

TEST_CASE("special forms") {
  const auto forms = fam::jr_special_forms(4);
  REQUIRE(forms.size() == 9);
  CHECK(forms[0] == HomogeneousPolynomial::linear({2, 1, 1, 1}));
  CHECK(forms[1] == HomogeneousPolynomial::linear({1, 1, 1, -1}));
  CHECK(forms[8] == HomogeneousPolynomial::linear({8, 1, 1, -1}));
  CHECK(fam::special_forms(fam::make_ideal(fam::Jr{4})).size() == 9);
  CHECK(fam::special_forms(fam::make_ideal(fam::Irr{4})).empty());
  // typed by hand: a different cubic, then J(4) itself with generators reordered
  const auto typed = algebra::parse_ideal("x*y*z + y*z*w, w^4, x^4, y^4, z^4", {"x", "y", "z", "w"}, FieldSpec::rationals());
  CHECK(fam::special_forms(typed).empty());
  const auto same = algebra::parse_ideal("x^2*y*z + x*y*z*w, w^4, x^4, y^4, z^4", {"x", "y", "z", "w"}, FieldSpec::rationals());
  CHECK(fam::special_forms(same).size() == 9);
}
