#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "tcl/errors.hpp"
#include "tcl/filtration.hpp"

using namespace tcl;

namespace {

TightFiltration filtration(std::uint32_t p, unsigned r, unsigned d, unsigned e) {
  auto R = HypersurfaceRing::fermat(p, r, d);
  std::vector<std::string> gens;
  for (unsigned i = 1; i <= d; ++i) gens.push_back("x" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : ""));
  return TightFiltration(validate_hsop(RIdeal::parse(R, gens)));
}

// n-th finite difference of a sequence.
std::vector<long long> diff(std::vector<long long> v, unsigned times) {
  for (unsigned k = 0; k < times; ++k)
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
  v.resize(v.size() - times);
  return v;
}

}  // namespace

TEST_SUITE("filtration") {
  TEST_CASE("floor division") {
    CHECK(floor_div(0, 1) == 0);
    CHECK(floor_div(-1, 1) == -1);
    CHECK(floor_div(-1, 2) == -1);
    CHECK(floor_div(2, 2) == 1);
    CHECK(floor_div(3, 2) == 1);
    CHECK(floor_div(-3, 2) == -2);
  }

  TEST_CASE("tight hilbert function examples") {
    auto tf = filtration(7, 3, 2, 1);
    CHECK(tf.tight_hilbert_series(3) == std::vector<std::uint64_t>{2, 7, 15});
    CHECK_THROWS_AS(tf.tight_hilbert_function(0), InputError);

    auto quad = filtration(5, 2, 2, 1);
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(quad.tight_hilbert_function(n) == 2 * oracle::binomial(n + 1, 2));
      CHECK(quad.tight_hilbert_function(n) == length_of_quotient(ideal_power(quad.ideal(), n)));
    }
  }

  TEST_CASE("tight hilbert function is strictly increasing and matches counting") {
    for (auto [p, r, d, e] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>>{
             {7, 3, 2, 1}, {5, 2, 2, 1}, {5, 3, 3, 1}, {7, 5, 2, 2}, {11, 4, 2, 1}}) {
      auto tf = filtration(p, r, d, e);
      const auto h = tf.tight_hilbert_series(5);
      for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] > h[i - 1]);
      for (unsigned n = 1; n <= 5; ++n)
        CHECK(h[n - 1] == oracle::fermat_closure_colength(r, d, e, n, (n - 1) * e + d * e));
    }
  }

  TEST_CASE("coefficient fit examples") {
    auto tf = filtration(7, 3, 2, 1);
    auto fit = tf.fit_coefficients();
    CHECK(fit.coefficients == std::vector<long long>{3, 1, 0});
    CHECK(fit.stabilized);
    CHECK(fit.window_lo == 2);
    CHECK(fit.validation_n == fit.window_hi + 1);
    CHECK(filtration(5, 2, 2, 1).fit_coefficients().coefficients == std::vector<long long>{2, 0, 0});
  }

  TEST_CASE("fit from the first values") {
    const std::vector<std::uint64_t> h{2, 7, 15, 26};
    auto fit = fit_tight_coefficients(h, 1, 2);
    CHECK(fit.coefficients == std::vector<long long>{3, 1, 0});
  }

  TEST_CASE("fit rejects a sequence that is not yet polynomial") {
    const std::vector<std::uint64_t> h{1, 7, 15, 26};
    CHECK_THROWS_WITH_AS(fit_tight_coefficients(h, 1, 2), doctest::Contains("polynomial regime not reached"),
                         InconsistencyError);
    const std::vector<std::uint64_t> short_series{2, 7};
    CHECK_THROWS_AS(fit_tight_coefficients(short_series, 1, 2), InputError);
  }

  TEST_CASE("leading coefficient equals the multiplicity of J") {
    // For a CM ring and a parameter ideal, l(R/J^n) has leading coefficient e(J) = r e^d,
    // read off as the d-th finite difference.
    for (auto [p, r, d, e] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>>{
             {7, 3, 2, 1}, {5, 3, 3, 1}, {7, 5, 2, 2}}) {
      auto tf = filtration(p, r, d, e);
      std::vector<long long> raw;
      std::vector<std::uint64_t> vals;
      for (unsigned n = 1; n <= d + 2; ++n) {
        const auto len = length_of_quotient(tf.power(n));
        raw.push_back(static_cast<long long>(len));
        vals.push_back(len);
      }
      long long mult = static_cast<long long>(r);
      for (unsigned i = 0; i < d; ++i) mult *= e;
      for (long long v : diff(raw, d)) CHECK(v == mult);
      CHECK(fit_tight_coefficients(vals, 1, d).coefficients[0] == mult);
    }
  }

  TEST_CASE("huckaba-marley examples and cross-check with the fit") {
    auto tf = filtration(7, 3, 2, 1);
    auto h1 = tf.huckaba_marley_coefficient(1, 10);
    CHECK(h1.value == 1);
    REQUIRE(h1.terms.size() >= 2);
    CHECK(h1.terms[0] == std::pair<unsigned, std::uint64_t>{1, 1});
    CHECK(h1.terms[1].second == 0);
    CHECK(tf.huckaba_marley_coefficient(2, 10).value == 0);
    CHECK_THROWS_AS(tf.huckaba_marley_coefficient(0, 10), InputError);
    CHECK_THROWS_AS(tf.huckaba_marley_coefficient(3, 10), InputError);

    for (auto [p, r, d, e] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>>{
             {7, 3, 2, 1}, {5, 2, 2, 1}, {5, 3, 3, 1}, {7, 5, 2, 2}, {11, 4, 2, 1}}) {
      auto g = filtration(p, r, d, e);
      auto fit = g.fit_coefficients();
      for (unsigned j = 1; j <= d; ++j) CHECK(g.huckaba_marley_coefficient(j, 20).value == fit.coefficients[j]);
    }
  }

  TEST_CASE("huckaba-marley cap without vanishing is an error") {
    auto tf = filtration(7, 5, 2, 2);
    CHECK_THROWS_WITH_AS(tf.huckaba_marley_coefficient(1, 1), doctest::Contains("partial sum"), InconsistencyError);
  }

  TEST_CASE("identity checks") {
    auto tf = filtration(7, 3, 2, 1);
    auto vv = tf.vv_check(6);
    CHECK(vv.overall);
    CHECK(vv.verdicts.size() == 7);
    CHECK(vv.verdicts.front().first == 0);
    auto bu = tf.buchsbaum_check(5);
    CHECK(bu.overall);
    CHECK(bu.verdicts.front().first == 3);
    CHECK_THROWS_AS(tf.buchsbaum_check(2), InputError);
    auto it = tf.itoh_check(5);
    CHECK(it.overall);

    auto t3 = filtration(5, 3, 3, 1);
    CHECK(t3.vv_check(4).overall);
    CHECK(t3.itoh_check(4).overall);
    CHECK(filtration(7, 5, 2, 2).buchsbaum_check(5).overall);
  }

  TEST_CASE("tightly closed powers") {
    auto quad = filtration(5, 2, 2, 1);
    auto rep = quad.tightly_closed_powers_check(6);
    CHECK(rep.applicable);
    CHECK(rep.overall);
    auto t3 = filtration(5, 3, 3, 1);
    CHECK(t3.tightly_closed_powers_check(5).overall);
    auto cubic = filtration(7, 3, 2, 1);
    auto na = cubic.tightly_closed_powers_check(6);
    CHECK_FALSE(na.applicable);
    CHECK(na.note.find("hypothesis not met") != std::string::npos);
  }

  TEST_CASE("reduction numbers") {
    auto a = filtration(7, 3, 2, 1);
    CHECK(a.reduction_number_me() == 2);
    CHECK(a.reduction_number_me_closed_form() == 2);
    CHECK(a.tight_reduction_number(a.default_cap()) == 1);
    auto b = filtration(7, 5, 2, 2);
    CHECK(b.reduction_number_me() == 3);
    CHECK(b.tight_reduction_number(b.default_cap()) <= 2);
    auto c = filtration(5, 3, 3, 1);
    CHECK(c.reduction_number_me() == 2);
    CHECK(c.reduction_number_me_closed_form() == 2);
    CHECK(filtration(5, 2, 2, 1).tight_reduction_number(4) == 0);
    CHECK_THROWS_AS(b.tight_reduction_number(1), InconsistencyError);
  }

  TEST_CASE("rees algebra verdicts") {
    auto a = filtration(7, 3, 2, 1).reduction_data();
    CHECK(a.rees_cm);
    CHECK(a.sufficient_condition);
    auto b = filtration(7, 5, 2, 2).reduction_data();
    CHECK_FALSE(b.sufficient_condition);
    CHECK(b.rees_cm == (b.r_star <= 1));
    auto c = filtration(5, 2, 2, 1).reduction_data();
    CHECK(c.r_star == 0);
    CHECK(c.rees_cm);
  }

  TEST_CASE("filtration requires a licensed fermat ring") {
    auto R = HypersurfaceRing::fermat(5, 7, 2);
    auto J = validate_hsop(RIdeal::parse(R, {"x1", "x2"}));
    CHECK_THROWS_AS(TightFiltration{J}, LicenseError);
    TightFiltration forced(J, true);
    CHECK(forced.conjectural());
    auto G = HypersurfaceRing::general(5, {"x", "y", "z"}, "x*y - z^2");
    CHECK_THROWS_AS(TightFiltration(validate_hsop(RIdeal::parse(G, {"x", "y"}))), LicenseError);
  }

  TEST_CASE("the filtration is monotone") {
    auto tf = filtration(11, 4, 2, 1);
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(tf.closure(n - 1).contains(tf.closure(n)));
      CHECK(tf.closure(n).contains(tf.shifted(n - 1)));
      CHECK(tf.closure(n).contains(tf.power(n)));
    }
  }
}
