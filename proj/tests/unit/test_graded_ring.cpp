#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tcl/errors.hpp"
#include "tcl/graded_ring.hpp"

using namespace tcl;

namespace {

RIdeal ideal_of(const HypersurfaceRing& R, std::vector<std::string> gens) { return RIdeal::parse(R, gens); }

}  // namespace

TEST_SUITE("graded ring") {
  TEST_CASE("fermat rings") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    CHECK(R.nvars() == 3);
    CHECK(R.vars() == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(R.format(R.relation()) == "x0^3 + x1^3 + x2^3");
    CHECK(R.krull_dimension() == 2);
    CHECK(R.formula_licensed());
    CHECK(R.license_condition().find("7 > 1") != std::string::npos);

    auto R2 = HypersurfaceRing::fermat(5, 3, 3);
    CHECK(R2.nvars() == 4);
    CHECK(R2.formula_licensed());
    CHECK(R2.license_condition().find("5 > 3") != std::string::npos);

    CHECK_FALSE(HypersurfaceRing::fermat(5, 7, 2).formula_licensed());
  }

  TEST_CASE("fermat preconditions") {
    CHECK_THROWS_WITH_AS(HypersurfaceRing::fermat(3, 3, 2), doctest::Contains("p divides r"), InputError);
    CHECK_THROWS_AS(HypersurfaceRing::fermat(4, 3, 2), InputError);
    CHECK_THROWS_AS(HypersurfaceRing::fermat(7, 1, 2), InputError);
    CHECK_THROWS_AS(HypersurfaceRing::fermat(7, 3, 1), InputError);
  }

  TEST_CASE("general hypersurfaces") {
    auto R = HypersurfaceRing::general(5, {"x", "y", "z"}, "x*y - z^2");
    CHECK(R.krull_dimension() == 2);
    CHECK_FALSE(R.is_fermat());
    CHECK_FALSE(R.formula_licensed());
    CHECK_THROWS_AS(HypersurfaceRing::general(5, {"x", "y"}, "x + y^2"), InputError);
    CHECK_THROWS_AS(HypersurfaceRing::general(5, {"x", "y"}, "0"), InputError);
    CHECK_THROWS_AS(HypersurfaceRing::general(5, {"x", "x"}, "x*x"), InputError);
    CHECK_THROWS_AS(HypersurfaceRing::general(5, {"x", "y"}, "x*w"), ParseError);
  }

  TEST_CASE("maximal ideal powers") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    CHECK(maximal_ideal_power(R, 0).is_unit());
    CHECK(maximal_ideal_power(R, 2).gens().size() == 6);
    CHECK(maximal_ideal_power(R, 3).contains(R.parse("x0^3")));
    CHECK_FALSE(maximal_ideal_power(R, 3).contains(R.parse("x0^2")));
    CHECK(ideal_equal(maximal_ideal_power(R, 1), maximal_ideal(R)));
  }

  TEST_CASE("membership happens modulo the relation") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    auto J = ideal_of(R, {"x1", "x2"});
    CHECK(J.contains(R.parse("x0^3")));
    CHECK_FALSE(J.contains(R.parse("x0^2")));
    CHECK(RIdeal::zero(R).contains(R.relation()));
  }

  TEST_CASE("hilbert function examples") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    auto J = ideal_of(R, {"x1", "x2"});
    std::vector<std::uint64_t> got;
    for (std::uint64_t t = 0; t < 4; ++t) got.push_back(hilbert_function(J, t));
    CHECK(got == std::vector<std::uint64_t>{1, 1, 1, 0});
    for (std::uint64_t t = 0; t < 4; ++t) CHECK(hilbert_function(RIdeal::unit(R), t) == 0);
    CHECK(hilbert_function(maximal_ideal_power(R, 2), 1) == 3);
    CHECK_THROWS_AS(hilbert_function(ideal_of(R, {"x1 + 1"}), 1), InputError);
  }

  TEST_CASE("standard monomials of a degree") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    CHECK(standard_monomials(R.relation_basis(), 3).size() == 9);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(3, 0).size() == 1);
  }

  TEST_CASE("length of quotient examples") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    auto J = ideal_of(R, {"x1", "x2"});
    CHECK(length_of_quotient(J) == 3);
    CHECK(length_of_quotient(ideal_sum(J, maximal_ideal_power(R, 2))) == 2);
    CHECK_THROWS_WITH_AS(length_of_quotient(ideal_of(R, {"x1"})), doctest::Contains("not m-primary"), InputError);
    auto table = hilbert_table(J);
    CHECK(table.values == std::vector<std::uint64_t>{1, 1, 1, 0});
    CHECK(table.total_length == 3);
  }

  TEST_CASE("fermat hilbert function matches the series coefficients") {
    for (auto [p, r, d] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
             {7, 3, 2}, {5, 2, 2}, {5, 3, 3}, {7, 5, 2}, {11, 4, 2}, {3, 2, 3}}) {
      auto R = HypersurfaceRing::fermat(p, r, d);
      const auto series = oracle::fermat_hilbert_series(r, d, 3 * r);
      for (unsigned t = 0; t <= 3 * r; ++t)
        CHECK(hilbert_function(RIdeal::zero(R), t) == static_cast<std::uint64_t>(series[t]));
    }
  }

  TEST_CASE("lengths of monomial-type quotients agree with free-basis counting") {
    for (auto [p, r, d, e] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned, unsigned>>{
             {7, 3, 2, 1}, {5, 2, 2, 1}, {5, 3, 3, 1}, {7, 5, 2, 2}, {11, 4, 2, 1}}) {
      auto R = HypersurfaceRing::fermat(p, r, d);
      std::vector<std::string> gens;
      for (unsigned i = 1; i <= d; ++i) gens.push_back("x" + std::to_string(i) + "^" + std::to_string(e));
      auto J = ideal_of(R, gens);
      for (unsigned n = 1; n <= 3; ++n)
        for (unsigned k = n * e; k <= n * e + 3; ++k) {
          auto K = ideal_sum(ideal_power(J, n), maximal_ideal_power(R, k));
          CHECK(length_of_quotient(K) == oracle::fermat_closure_colength(r, d, e, n, k));
        }
    }
  }

  TEST_CASE("socle degrees in a polynomial ring") {
    auto S2 = HypersurfaceRing::polynomial_ring(7, {"y1", "y2"});
    auto n2 = maximal_ideal_power(S2, 2);
    CHECK(socle_degrees(n2) == std::vector<std::uint64_t>{1, 1});
    CHECK(infer_last_twists(n2, 2, 1) == std::vector<std::uint64_t>{3, 3});
    CHECK(infer_last_twists(maximal_ideal(S2), 2, 1) == std::vector<std::uint64_t>{2});

    for (std::size_t d : {2u, 3u}) {
      std::vector<std::string> vars;
      for (std::size_t i = 1; i <= d; ++i) vars.push_back("y" + std::to_string(i));
      auto S = HypersurfaceRing::polynomial_ring(5, vars);
      for (unsigned n = 1; n <= 3; ++n) {
        auto K = maximal_ideal_power(S, n);
        const auto socle = socle_degrees(K);
        CHECK(socle.size() == oracle::binomial(n + d - 2, d - 1));
        CHECK(std::all_of(socle.begin(), socle.end(), [&](auto s) { return s == n - 1; }));
        const auto twists = infer_last_twists(K, static_cast<unsigned>(d), 1);
        CHECK(std::all_of(twists.begin(), twists.end(), [&](auto s) { return s == n - 1 + d; }));
      }
    }
  }

  TEST_CASE("socle of the residue field") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    CHECK(socle_degrees(maximal_ideal(R)) == std::vector<std::uint64_t>{0});
  }

  TEST_CASE("intersection and colon in the quotient ring") {
    auto R = HypersurfaceRing::fermat(7, 3, 2);
    auto J = ideal_of(R, {"x1", "x2"});
    // x0^3 ∈ J, so (J : x0^2) contains x0.
    auto q = colon(J, ideal_of(R, {"x0^2"}));
    CHECK(q.contains(R.parse("x0")));
    CHECK(ideal_equal(colon(J, maximal_ideal(R)), ideal_sum(J, ideal_of(R, {"x0^2"}))));
    CHECK(ideal_equal(intersect(J, maximal_ideal_power(R, 2)),
                      ideal_sum(ideal_power(J, 2), ideal_of(R, {"x0*x1", "x0*x2"}))));
  }

  TEST_CASE("random ideals in the quotient respect containments") {
    std::mt19937 rng(9);
    auto R = HypersurfaceRing::fermat(5, 2, 2);
    for (int i = 0; i < 30; ++i) {
      std::vector<Poly> ga{oracle::random_homogeneous(rng, R.characteristic(), 3, 2, 1)};
      std::vector<Poly> gb{oracle::random_homogeneous(rng, R.characteristic(), 3, 2, 1),
                           oracle::random_homogeneous(rng, R.characteristic(), 3, 2, 2)};
      RIdeal a(R, ga), b(R, gb);
      if (b.gens().is_zero_ideal()) continue;
      RIdeal inter = intersect(a, b);
      CHECK(a.contains(inter));
      CHECK(b.contains(inter));
      CHECK(inter.contains(ideal_product(a, b)));
      CHECK(colon(a, b).contains(a));
      CHECK(a.contains(ideal_product(colon(a, b), b)));
    }
  }
}
