#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/errors.hpp"
#include "qh/novikov.hpp"

#include <random>

using namespace qh;

namespace {

NovikovElement mono(long num, long den, long q, long te_num, long te_den = 1) {
    return NovikovElement::monomial(rat(num, den), q, rat(te_num, te_den));
}

// Seeded random element with small exponents; unit_shape forces an invertible
// leading term.
NovikovElement random_element(std::mt19937_64& rng, bool unit_shape) {
    std::uniform_int_distribution<int> nterms(unit_shape ? 1 : 0, 4);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<long> qpow(-2, 2);
    std::uniform_int_distribution<long> texp(-6, 3);
    std::vector<NovikovTerm> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        terms.push_back({rat(c, den(rng)), qpow(rng), rat(texp(rng))});
    }
    auto e = NovikovElement::from_terms(terms);
    if (unit_shape) {
        // ensure a clean leading term above everything else
        e = e.truncated(Floor()) + mono(1, 1, 0, 4);
    }
    return e;
}

} // namespace

TEST_CASE("additive inverse and merge") {
    auto one = NovikovElement(rat(1));
    CHECK((one + (-one)).is_zero());
    auto a = mono(2, 1, 0, -1) + mono(1, 1, 0, -3);
    auto b = mono(1, 1, 0, -3);
    auto s = a + b;
    REQUIRE(s.terms().size() == 2);
    CHECK(s.terms()[0].coeff == 2);
    CHECK(s.terms()[1].coeff == 2);
    CHECK(s.terms()[1].t_exp == -3);
}

TEST_CASE("floor rule under addition") {
    auto a = mono(1, 1, 0, 0).truncated(Floor(rat(-5)));
    auto b = mono(1, 1, 0, 0).truncated(Floor(rat(-3)));
    auto s = a + b;
    REQUIRE(s.floor().has_value());
    CHECK(*s.floor() == -3);
}

TEST_CASE("exponent law and binomial square") {
    auto ta = mono(1, 1, 0, 5, 2);
    auto tb = mono(1, 1, 0, -1, 2);
    auto p = ta * tb;
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms()[0].t_exp == 2);

    auto u = NovikovElement(rat(1)) + mono(1, 1, 0, -1);
    auto sq = u * u;
    REQUIRE(sq.terms().size() == 3);
    CHECK(sq.terms()[0].coeff == 1);
    CHECK(sq.terms()[1].coeff == 2);
    CHECK(sq.terms()[1].t_exp == -1);
    CHECK(sq.terms()[2].t_exp == -2);
}

TEST_CASE("inverse monomials cancel") {
    auto a = NovikovElement::monomial(rat(1), 1, rat(1)); // q t^delta, delta=1
    auto b = NovikovElement::monomial(rat(1), -1, rat(-1));
    CHECK((a * b).is_scalar_one());
}

TEST_CASE("leading term and tie break") {
    auto a = mono(2, 1, 0, -1) + mono(1, 1, 0, -3);
    auto l = a.leading();
    REQUIRE(l);
    CHECK(l->coeff == 2);
    CHECK(l->q_power == 0);
    CHECK(l->t_exp == -1);
    CHECK(!NovikovElement().leading());

    auto tie = NovikovElement::monomial(rat(1), 2, rat(1)) + NovikovElement::monomial(rat(1), 1, rat(1));
    auto lt = tie.leading();
    REQUIRE(lt);
    CHECK(lt->q_power == 2); // larger q-power first on equal t-exponent
    CHECK(!tie.is_unit());
}

TEST_CASE("invert identity and geometric series") {
    auto one = NovikovElement(rat(1));
    CHECK(nov_invert(one, rat(-10)).is_scalar_one());

    // invert(1 + t^-k) = 1 - t^-k + t^-2k - ...
    auto u = NovikovElement(rat(1)) + mono(1, 1, 0, -2);
    auto v = nov_invert(u, rat(-9));
    REQUIRE(v.floor().has_value());
    CHECK(*v.floor() == -9);
    std::vector<long> expect_exp = {0, -2, -4, -6, -8};
    REQUIRE(v.terms().size() == expect_exp.size());
    for (std::size_t i = 0; i < expect_exp.size(); ++i) {
        CHECK(v.terms()[i].t_exp == expect_exp[i]);
        CHECK(v.terms()[i].coeff == ((i % 2) ? -1 : 1));
    }
    CHECK(agree_above(u * v, NovikovElement(rat(1)), rat(-9)));
}

TEST_CASE("leading-term law of the inverse") {
    auto u = mul_monomial(NovikovElement(rat(1)) + mono(1, 2, 0, -1), rat(3, 2), 0, rat(7, 3));
    auto v = nov_invert(u, rat(-5));
    auto l = v.leading();
    REQUIRE(l);
    CHECK(l->coeff == rat(2, 3));
    CHECK(l->t_exp == rat(-7, 3));
}

TEST_CASE("invert errors") {
    CHECK_THROWS_AS(nov_invert(NovikovElement(), rat(-1)), ZeroElement);
    auto tie = NovikovElement::monomial(rat(1), 2, rat(0)) + NovikovElement::monomial(rat(1), 0, rat(0));
    CHECK_THROWS_AS(nov_invert(tie, rat(-1)), NotAUnit);
    // floored input cannot deliver arbitrarily low inverses
    auto u = (NovikovElement(rat(1)) + mono(1, 1, 0, -1)).truncated(Floor(rat(-2)));
    CHECK_THROWS_AS(nov_invert(u, rat(-50)), FloorTooHigh);
    CHECK_NOTHROW(nov_invert(u, rat(-2)));
}

TEST_CASE("ring laws on sampled elements") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_element(rng, false);
        auto b = random_element(rng, false);
        auto c = random_element(rng, false);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("multiplicativity of the leading t-exponent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_element(rng, true);
        auto b = random_element(rng, true);
        auto p = a * b;
        REQUIRE(!p.is_zero()); // rational coefficients form an integral domain
        CHECK(p.lead_t_or_zero() == a.lead_t_or_zero() + b.lead_t_or_zero());
    }
}

TEST_CASE("inverse multiplies back to one on sampled units") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_element(rng, true);
        auto v = nov_invert(a, rat(-20));
        auto p = a * v;
        // With a positive leading exponent the truncation error of v enters
        // above -20; the product floor records where knowledge stops.
        Exponent bound = p.floor() ? *p.floor() : rat(-20);
        CHECK(agree_above(p, NovikovElement(rat(1)), bound));
    }
    // Units with leading term at t^0 multiply back to 1 on the full window.
    for (int trial = 0; trial < 100; ++trial) {
        auto tail = random_element(rng, false) * mono(1, 1, 0, -4); // exponents <= -1
        auto a = NovikovElement(rat(2)) + tail;
        auto v = nov_invert(a, rat(-20));
        CHECK(agree_above(a * v, NovikovElement(rat(1)), rat(-20)));
    }
}

TEST_CASE("canonical rendering") {
    CHECK(NovikovElement().to_string() == "0");
    CHECK(NovikovElement(rat(1)).to_string() == "1");
    auto e = mono(1, 2, 1, 3, 2) + mono(1, 1, 0, 0);
    CHECK(e.to_string() == "1/2*q^1*t^(3/2) + 1"); // sorted by t-exponent, descending
    auto f = mono(1, 1, 0, 0) - mono(1, 1, 0, -1);
    CHECK(f.to_string() == "1 - t^(-1)");
    CHECK(mono(1, 1, 0, -2).truncated(Floor(rat(-3))).to_string(true) == "t^(-2) + O(t^(-3))");
}
