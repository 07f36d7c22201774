#include <doctest.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/families.hpp"
#include "lefschetz/liaison.hpp"
#include "oracles.hpp"

using namespace lefschetz;
using liaison::ChainVariant;
using liaison::HVector;
namespace fam = families;

namespace {

// Hilbert function of k[x_1..x_n]/(x_i^{d_i}) by counting exponent vectors.
std::vector<long> count_ci(const std::vector<int>& degrees) {
  std::vector<long> h{1};
  for (int d : degrees) {
    std::vector<long> next(h.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int e = 0; e < d; ++e) next[i + static_cast<std::size_t>(e)] += h[i];
    h = next;
  }
  return h;
}

}  // namespace

TEST_CASE("complete intersection h-vectors are symmetric and count monomials") {
  oracle::Gen gen(1234);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> degrees(static_cast<std::size_t>(gen.between(1, 6)));
    for (auto& d : degrees) d = static_cast<int>(gen.between(1, 7));
    const auto h = liaison::ci_hvector(degrees);
    CHECK(h.values.at(0) == 1);
    CHECK(h.values.back() != 0);
    const std::size_t D = h.values.size() - 1;
    for (std::size_t j = 0; j <= D; ++j) CHECK(h.values[j] == h.values[D - j]);
    CHECK(h.values == count_ci(degrees));
  }
  CHECK(liaison::ci_hvector({1, 1}).values == std::vector<long>{1});
  CHECK_THROWS_AS(liaison::ci_hvector({}), DomainError);
  CHECK_THROWS_AS(liaison::ci_hvector({2, 0}), DomainError);
}

TEST_CASE("basic double link step") {
  const HVector h{{1, 2, 1}}, c{{1, 3, 3, 1}};
  CHECK(liaison::bdl_step(h, c).values == std::vector<long>{1, 4, 5, 2});
  CHECK(h.at(-1) == 0);
  CHECK(h.at(7) == 0);
}

TEST_CASE("chain agrees with direct linear algebra") {
  for (int r = 3; r <= 5; ++r) {
    const auto chain = liaison::bdl_chain(r, ChainVariant::Irr);
    REQUIRE(chain.size() == static_cast<std::size_t>(r));
    for (const auto& step : chain) {
      const auto h = algebra::hilbert_profile(step.ideal);
      CHECK(step.hvector.values == std::vector<long>(h.values.begin(), h.values.end()));
    }
    const auto last = algebra::hilbert_profile(fam::make_ideal(fam::Irr{r}));
    CHECK(chain.back().hvector.values == std::vector<long>(last.values.begin(), last.values.end()));
    CHECK(chain.front().link_variable == -1);
    CHECK(chain.front().link_ci_degrees.empty());
    CHECK(chain.front().hvector == liaison::ci_hvector(std::vector<int>(static_cast<std::size_t>(r - 1), r - 1)));
  }
}

TEST_CASE("the J(r) chain has the same rows") {
  for (int r = 3; r <= 7; ++r) {
    const auto a = liaison::bdl_chain(r, ChainVariant::Irr);
    const auto b = liaison::bdl_chain(r, ChainVariant::Jr);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].hvector == b[i].hvector);
    if (r <= 4) {
      for (const auto& step : b) {
        const auto h = algebra::hilbert_profile(step.ideal);
        CHECK(step.hvector.values == std::vector<long>(h.values.begin(), h.values.end()));
      }
    }
    CHECK(b.back().ideal.to_string() == fam::make_ideal(fam::Jr{r}).to_string());
  }
  CHECK_THROWS_AS(liaison::bdl_chain(2, ChainVariant::Irr), DomainError);
  CHECK_THROWS_AS(liaison::bdl_chain(8, ChainVariant::Jr), DomainError);
}

TEST_CASE("final row drops at binom(r,2)") {
  for (int r = 3; r <= 6; ++r) {
    const auto& h = liaison::bdl_chain(r, ChainVariant::Irr).back().hvector;
    const int m = r * (r - 1) / 2;
    CHECK(h.at(m - 1) >= h.at(m));
  }
}

TEST_CASE("midpoint inequality") {
  for (int s = 2; s <= 9; ++s) {
    const auto d = liaison::diff_of_hf(s);
    std::vector<int> jd{s + 1, s + 1};
    jd.insert(jd.end(), static_cast<std::size_t>(s - 2), s);
    const auto hi = count_ci(std::vector<int>(static_cast<std::size_t>(s), s));
    const auto hj = count_ci(jd);
    const auto m = static_cast<std::size_t>(s * (s - 1) / 2);
    CHECK(d.left == hi[m] - hi[m - 1]);
    CHECK(d.right == hj[m + 1] - hj[m + 2]);
    CHECK(d.holds == (d.left <= d.right));
    CHECK(d.holds);
    CHECK(liaison::diff_of_hf_check(s));
  }
  CHECK_THROWS_AS(liaison::diff_of_hf(1), DomainError);
  CHECK_THROWS_AS(liaison::diff_of_hf(10), DomainError);
}
