#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tcl/errors.hpp"
#include "tcl/field.hpp"
#include "tcl/parse.hpp"
#include "tcl/poly.hpp"

using namespace tcl;

namespace {

const std::vector<std::string> kVars3{"x0", "x1", "x2"};

Poly P(const std::string& s, std::uint32_t p = 7) { return parse_poly(s, kVars3, PrimeChar(p)); }

std::string S(const Poly& a) { return to_string(a, kVars3); }

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime characteristic arithmetic") {
    PrimeChar f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.pow(2, 49) == 2);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.reduce(-14) == 0);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
  }

  TEST_CASE("inverses agree with brute force for every small prime") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      PrimeChar f(p);
      for (std::uint32_t a = 1; a < p; ++a) {
        std::uint32_t brute = 0;
        for (std::uint32_t b = 1; b < p; ++b)
          if (a * b % p == 1) brute = b;
        CHECK(f.inv(a) == brute);
      }
    }
  }

  TEST_CASE("log_p recognises powers of p only") {
    PrimeChar f(5);
    CHECK(f.log_p(1) == 0u);
    CHECK(f.log_p(5) == 1u);
    CHECK(f.log_p(125) == 3u);
    CHECK_FALSE(f.log_p(0).has_value());
    CHECK_FALSE(f.log_p(10).has_value());
    CHECK_FALSE(f.log_p(6).has_value());
  }

  TEST_CASE("non-prime characteristic is rejected") {
    CHECK_THROWS_AS(PrimeChar(1), InputError);
    CHECK_THROWS_AS(PrimeChar(9), InputError);
    CHECK_THROWS_AS(PrimeChar(0), InputError);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
  }

  TEST_CASE("field scalars") {
    PrimeChar f(11);
    FieldScalar a(-3, f);
    CHECK(a.value() == 8);
    CHECK((a * a.inverse()).value() == 1);
    CHECK((a + FieldScalar(3, f)).is_zero());
  }
}

TEST_SUITE("monomial order") {
  TEST_CASE("grevlex examples") {
    const auto ord = MonomialOrder::grevlex();
    CHECK(compare_monomials(Monomial{2, 0, 0}, Monomial{1, 1, 0}, ord) > 0);
    CHECK(compare_monomials(Monomial{0, 3, 0}, Monomial{2, 0, 0}, ord) > 0);
    CHECK(compare_monomials(Monomial{0, 2, 0}, Monomial{1, 0, 1}, ord) > 0);
    CHECK(compare_monomials(Monomial{1, 1, 1}, Monomial{1, 1, 1}, ord) == 0);
  }

  TEST_CASE("length mismatch is an error") {
    CHECK_THROWS_AS(compare_monomials(Monomial{1, 0}, Monomial{1, 0, 0}, {}), InputError);
  }

  TEST_CASE("grevlex is a total order compatible with multiplication") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> e(0, 4);
    auto rnd = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
    for (int i = 0; i < 300; ++i) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      const int ab = compare_monomials(a, b, {});
      CHECK(ab == -compare_monomials(b, a, {}));
      CHECK(compare_monomials(a * c, b * c, {}) == ab);
      if (!(c == Monomial(3))) CHECK(compare_monomials(a * c, a, {}) > 0);
    }
  }

  TEST_CASE("divisibility, lcm and quotient") {
    Monomial a{1, 2, 0}, b{0, 1, 3};
    CHECK(a.lcm(b) == Monomial{1, 2, 3});
    CHECK(Monomial{0, 1, 0}.divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK(a * b / b == a);
    CHECK(Monomial{0, 0, 4}.pure_power_variable() == 2);
    CHECK(a.pure_power_variable() == -1);
  }
}

TEST_SUITE("parse") {
  TEST_CASE("parsing literal polynomials") {
    Poly f = P("x0^3 + x1^3 + x2^3");
    CHECK(f.size() == 3);
    for (const auto& t : f.terms()) CHECK(t.coeff == 1);
    CHECK(S(P("7*x0 + x1")) == "x1");
    Poly sq = parse_poly("(x1+x2)^2", kVars3, PrimeChar(5));
    CHECK(to_string(sq, kVars3) == "x1^2 + 2*x1*x2 + x2^2");
  }

  TEST_CASE("implicit multiplication, signs and constants") {
    CHECK(S(P("2 x0 x1 - x1^2")) == "2*x0*x1 + 6*x1^2");
    CHECK(S(P("-1")) == "6");
    CHECK(S(P("x0 - x0")) == "0");
    CHECK(S(P("3(x0+1)")) == "3*x0 + 3");
  }

  TEST_CASE("errors carry byte offsets") {
    auto offset_of = [](const std::string& text) -> std::size_t {
      try {
        P(text);
      } catch (const ParseError& e) {
        return e.offset();
      }
      return std::string::npos;
    };
    CHECK(offset_of("x0 + y") == 5);
    CHECK(offset_of("x0^-1") == 3);
    CHECK(offset_of("x0 + ") == 5);
    CHECK(offset_of("x0 )") == 3);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("(x0") != std::string::npos);
  }

  TEST_CASE("error messages name the problem") {
    CHECK_THROWS_WITH_AS(P("x0 + y"), doctest::Contains("unknown variable"), ParseError);
    CHECK_THROWS_WITH_AS(P("x0^-2"), doctest::Contains("negative exponent"), ParseError);
  }

  TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937 rng(1);
    for (std::uint32_t p : {2u, 5u, 7u, 13u}) {
      PrimeChar ch(p);
      for (int i = 0; i < 100; ++i) {
        Poly a = oracle::random_poly(rng, ch, 3, 5, 6);
        CHECK(parse_poly(to_string(a, kVars3), kVars3, ch) == a);
      }
    }
  }
}

TEST_SUITE("poly arithmetic") {
  TEST_CASE("identity, cancellation and products") {
    Poly a = P("x0 + 2*x2");
    CHECK(a + Poly(PrimeChar(7), 3) == a);
    Poly z = P("x1") - P("x1");
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK(S(P("x0+x1") * P("x0-x1")) == "x0^2 + 6*x1^2");
  }

  TEST_CASE("mismatched variable counts are rejected") {
    Poly a = P("x0");
    Poly b = Poly::variable(PrimeChar(7), 2, 0);
    CHECK_THROWS_WITH(a + b, doctest::Contains("mismatched variable count"));
    CHECK_THROWS(a * b);
    CHECK_THROWS(a + Poly::variable(PrimeChar(5), 3, 0));
  }

  TEST_CASE("leading data and homogeneity") {
    Poly f = P("x1^2 + x0*x2 + 3");
    CHECK(S(Poly::monomial(PrimeChar(7), f.leading_monomial())) == "x1^2");
    CHECK(f.degree() == 2);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(P("x0*x1 + x2^2").is_homogeneous());
    CHECK(S(P("3*x0 + x1").monic()) == "x0 + 5*x1");
  }

  TEST_CASE("ring axioms against the dense oracle") {
    std::mt19937 rng(2);
    PrimeChar ch(5);
    for (int i = 0; i < 200; ++i) {
      Poly a = oracle::random_poly(rng, ch, 3, 4, 4);
      Poly b = oracle::random_poly(rng, ch, 3, 4, 4);
      Poly c = oracle::random_poly(rng, ch, 3, 4, 4);
      CHECK(oracle::dense_of(a * b) == oracle::dense_mul(oracle::dense_of(a), oracle::dense_of(b), 5));
      CHECK(oracle::dense_of(a + b) == oracle::dense_add(oracle::dense_of(a), oracle::dense_of(b), 5));
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a + (-a) == Poly(ch, 3));
    }
  }

  TEST_CASE("pow matches repeated multiplication") {
    Poly a = P("x0 + 2*x1 + 3");
    Poly acc = Poly::constant(PrimeChar(7), 3, 1);
    for (unsigned n = 0; n < 6; ++n) {
      CHECK(a.pow(n) == acc);
      acc = acc * a;
    }
  }
}

TEST_SUITE("frobenius") {
  TEST_CASE("freshman dream and scalar powers") {
    Poly a = parse_poly("x1 + x2", kVars3, PrimeChar(5));
    CHECK(to_string(frobenius_pow(a, 5), kVars3) == "x1^5 + x2^5");
    CHECK(to_string(a.pow(5), kVars3) == "x1^5 + x2^5");
    CHECK(S(frobenius_pow(P("2*x0"), 49)) == "2*x0^49");
  }

  TEST_CASE("q must be a power of p") {
    CHECK_THROWS_AS(frobenius_pow(P("x0"), 6), InputError);
    CHECK_THROWS_AS(frobenius_pow(P("x0"), 14), InputError);
  }

  TEST_CASE("frobenius_pow equals repeated multiplication on 200 random polynomials") {
    std::mt19937 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      PrimeChar ch(p);
      for (int i = 0; i < 50; ++i) {
        Poly a = oracle::random_poly(rng, ch, 3, 4, 3);
        oracle::Dense acc{{oracle::Exps(3, 0), 1}};
        for (std::uint32_t k = 0; k < p; ++k) acc = oracle::dense_mul(acc, oracle::dense_of(a), p);
        CHECK(oracle::dense_of(frobenius_pow(a, p)) == acc);
      }
    }
  }

  TEST_CASE("frobenius is additive, multiplicative and composes") {
    std::mt19937 rng(4);
    PrimeChar ch(3);
    for (int i = 0; i < 60; ++i) {
      Poly a = oracle::random_poly(rng, ch, 3, 4, 3);
      Poly b = oracle::random_poly(rng, ch, 3, 4, 3);
      CHECK(frobenius_pow(a + b, 3) == frobenius_pow(a, 3) + frobenius_pow(b, 3));
      CHECK(frobenius_pow(a * b, 9) == frobenius_pow(a, 9) * frobenius_pow(b, 9));
      CHECK(frobenius_pow(frobenius_pow(a, 3), 9) == frobenius_pow(a, 27));
    }
  }
}
