#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/errors.hpp"
#include "qh/seidel.hpp"
#include "qh/tables.hpp"

#include <random>

using namespace qh;

namespace {

// spec with one divisor-like class and no quantum point invariants:
// not strongly uniruled, so Seidel units have the 1l (x) lambda + x form
RingSpec aspherical_plane() { return make_plane_ring(rat(1), rat(0)); }

SeidelElement trivial_loop(const RingSpec& spec) {
    return seidel_from_leading(spec, spec.unit_index, 0, {rat(0), rat(0)}, {});
}

} // namespace

TEST_CASE("assembly from the leading term") {
    RingSpec spec = aspherical_plane();
    SUBCASE("trivial loop gives the unit") {
        SeidelElement s = trivial_loop(spec);
        CHECK(s.element == QHElement::unit(spec));
        CHECK(seidel_consistency(s, spec).empty());
        CHECK(kappa0_extract(s, spec) == 0);
    }
    SUBCASE("divisor case: F_max (x) q t^{K_max} plus energy tail") {
        // leading class h with m_max = 1; one tail class contributing 1l
        Vec unit_coords(spec.dim(), Rational(0));
        unit_coords[spec.unit_index] = rat(2);
        SeidelElement s =
            seidel_from_leading(spec, 1, 1, {rat(3), rat(-1)}, {{"line", unit_coords}});
        CHECK(seidel_consistency(s, spec).empty());
        const auto& lead = s.element.coeff(1);
        REQUIRE(!lead.is_zero());
        CHECK(lead.terms()[0].q_power == 1);
        CHECK(lead.terms()[0].t_exp == 3);
        const auto& lam = s.element.coeff(spec.unit_index);
        REQUIRE(!lam.is_zero());
        CHECK(lam.terms()[0].q_power == 1 - 3); // m_max - c_1(line)
        CHECK(lam.terms()[0].t_exp == rat(2));  // K_max - omega(line)
        // kappa0 equals the tail energy in the divisor case
        CHECK(kappa0_extract(s, spec) == rat(1));
    }
    SUBCASE("nonpositive-energy tails are rejected") {
        Vec coords(spec.dim(), Rational(0));
        CHECK_THROWS_AS(
            seidel_from_leading(spec, 1, 1, {rat(0), rat(0)}, {{"0", coords}}),
            NonPositiveEnergyTail);
    }
}

TEST_CASE("consistency checker flags ledger drift") {
    RingSpec spec = aspherical_plane();
    Vec unit_coords(spec.dim(), Rational(0));
    unit_coords[spec.unit_index] = rat(1);
    SeidelElement s = seidel_from_leading(spec, 1, 1, {rat(3), rat(0)}, {{"line", unit_coords}});
    CHECK(seidel_consistency(s, spec).empty());
    SeidelElement broken = s;
    broken.ledger.entries["line"].coupling += 1;
    CHECK(!seidel_consistency(broken, spec).empty());
    SeidelElement drifted = s;
    drifted.element.set_coeff(0, NovikovElement::monomial(rat(1), 0, rat(-7)));
    CHECK(!seidel_consistency(drifted, spec).empty());
}

TEST_CASE("kappa0 extraction") {
    RingSpec spec = aspherical_plane();
    SeidelElement s = trivial_loop(spec);
    s.loop = {rat(9), rat(-2)};
    s.element.set_coeff(spec.unit_index, NovikovElement::monomial(rat(3), 0, rat(4)) +
                                             NovikovElement::monomial(rat(1), 0, rat(2)));
    // lambda = 3 t^{K_max-5} + t^{K_max-7} with K_max = 9
    CHECK(kappa0_extract(s, spec) == 5);
    s.element.set_coeff(spec.unit_index, NovikovElement());
    CHECK_THROWS_AS(kappa0_extract(s, spec), ZeroUnitCoefficient);
}

TEST_CASE("composition with the inverse loop returns the unit") {
    RingSpec spec = aspherical_plane();
    SUBCASE("trivial pair") {
        SeidelElement s = trivial_loop(spec);
        CHECK(seidel_compose(s, s, spec) == QHElement::unit(spec));
    }
    SUBCASE("synthetic unit-coefficient pair closes to 1l") {
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<long> num(1, 5);
        for (int trial = 0; trial < 25; ++trial) {
            Exponent kmax = rat(num(rng));
            Exponent kappa0 = rat(num(rng), 2);
            NovikovElement lambda =
                NovikovElement::monomial(rat(num(rng)), 0, kmax - kappa0) +
                NovikovElement::monomial(rat(num(rng) - 3), 0, kmax - kappa0 - rat(num(rng)));
            SeidelElement s = trivial_loop(spec);
            s.loop = {kmax, -kmax};
            s.element.set_coeff(spec.unit_index, lambda);
            SeidelElement si = trivial_loop(spec);
            si.loop = {kmax, -kmax};
            si.element.set_coeff(spec.unit_index, nov_invert(lambda, rat(-30)));
            QHElement composed = seidel_compose(s, si, spec, Floor(rat(-20)));
            QHElement unit = QHElement::unit(spec).truncated(Floor(rat(-20)));
            for (std::size_t i = 0; i < spec.dim(); ++i)
                CHECK(agree_above(composed.coeff(i), unit.coeff(i), rat(-20)));
            // unit coefficients are mutually inverse: leading exponents negate
            CHECK(kappa0_extract(s, spec) + kappa0_extract(si, spec) ==
                  s.loop.k_max - s.loop.k_min);
        }
    }
}

TEST_CASE("kappa identity report") {
    RingSpec spec = aspherical_plane();
    RingSpec blow = make_blowup_ring(3, rat(1, 2));
    auto mk = [&](const RingSpec& sp, Exponent kmax, Exponent kmin,
                  Exponent kappa0) {
        SeidelElement s = seidel_from_leading(sp, sp.unit_index, 0, {kmax, kmin}, {});
        s.element.set_coeff(sp.unit_index, NovikovElement::monomial(rat(1), 0, kmax - kappa0));
        return s;
    };
    SUBCASE("all-trivial quadruple") {
        auto r = k2_relations_check(trivial_loop(spec), trivial_loop(spec), spec,
                                    trivial_loop(blow), trivial_loop(blow), blow);
        CHECK(r.loop_contract_ok);
        CHECK(r.sum_base_ok);
        CHECK(r.sum_blow_ok);
        CHECK(r.match_plain_ok);
        CHECK(r.match_inv_ok);
        CHECK(r.kappa0 == 0);
    }
    SUBCASE("synthetic quadruple detects a bad kappa0'") {
        // kappa0 = 2, K_max - K_min = 5 forces kappa0' = 3; give it 4
        auto s = mk(spec, rat(3), rat(-2), rat(2));
        auto si_bad = mk(spec, rat(2), rat(-3), rat(4));
        auto sb = mk(blow, rat(3), rat(-2), rat(2));
        auto sbi = mk(blow, rat(2), rat(-3), rat(3));
        auto r = k2_relations_check(s, si_bad, spec, sb, sbi, blow);
        CHECK(!r.sum_base_ok);
        CHECK(r.sum_blow_ok);
        CHECK(r.match_plain_ok);
        CHECK(!r.match_inv_ok);
    }
    SUBCASE("conforming pair satisfies the sum identity by the inversion law") {
        std::mt19937_64 rng(99173);
        std::uniform_int_distribution<long> num(1, 6);
        for (int trial = 0; trial < 40; ++trial) {
            Exponent kmax = rat(num(rng));
            Exponent kmin = -rat(num(rng), 2);
            Exponent kappa0 = rat(num(rng), 3);
            NovikovElement lambda =
                NovikovElement::monomial(rat(num(rng)), 0, kmax - kappa0) +
                NovikovElement::monomial(rat(1), 0, kmax - kappa0 - rat(num(rng)));
            auto s = mk(spec, kmax, kmin, rat(1));
            s.element.set_coeff(spec.unit_index, lambda);
            auto si = mk(spec, -kmin, -kmax, rat(1));
            si.element.set_coeff(spec.unit_index, nov_invert(lambda, kmin - rat(20)));
            auto r = k2_relations_check(s, si, spec, s, si, spec);
            CHECK(r.sum_base_ok);
        }
    }
}

TEST_CASE("normalized blow-up unit and the inverse witness") {
    SUBCASE("hand example: u = 1 - s t^{kappa0}") {
        RingSpec blow = make_blowup_ring(3, rat(1));
        RRing ring(3, rat(1));
        Exponent ktmax = rat(7);
        Exponent kappa0 = rat(3);
        // S = -E (x) q t^{K_max} + 1l (x) t^{K_max - kappa0} mod the ideal
        SeidelElement s = seidel_from_leading(blow, *blow.basis_index("E"), 1,
                                              {ktmax, rat(-1)}, {}, rat(-1));
        s.element.set_coeff(blow.unit_index,
                            NovikovElement::monomial(rat(1), 0, ktmax - kappa0));
        s.ledger.entries["lambda-tail"] = {ktmax - kappa0, 1}; // bookkeeping only
        RElement u = su_unit_normalize(s, ring, blow, kappa0 - rat(25));
        RElement expect = RElement::one(ring) + RElement::monomial(ring, rat(-1), 1, kappa0);
        CHECK(u.coeff(0).is_scalar_one());
        CHECK(agree_above(u.coeff(1), expect.coeff(1), kappa0 - rat(25)));
        auto witness = extract_inverse_witness(u, ring, kappa0, kappa0 - rat(25));
        CHECK(witness.class_energy == kappa0 - ring.delta);
        CHECK(witness.s_power == 1); // n - 2
        CHECK(witness.coefficient == rat(-1)); // 1/r with r = -1
    }
    SUBCASE("n = 2 witness sits at s t^{2 delta - kappa0}") {
        RRing ring(2, rat(1));
        Exponent kappa0 = rat(5, 2);
        Rational r = rat(3);
        RElement u = RElement::one(ring) + RElement::monomial(ring, r, 1, kappa0);
        auto witness = extract_inverse_witness(u, ring, kappa0, kappa0 - rat(10));
        CHECK(witness.class_energy == kappa0 - ring.delta);
        CHECK(witness.s_power == 1);
        CHECK(witness.coefficient == rat(1) / r);
    }
    SUBCASE("pattern violations are named") {
        RingSpec blow = make_blowup_ring(3, rat(1));
        RRing ring(3, rat(1));
        SeidelElement s = trivial_loop(blow);
        s.element.set_coeff(blow.unit_index, NovikovElement()); // no unit coefficient
        CHECK_THROWS_AS(su_unit_normalize(s, ring, blow, rat(-10)), PatternViolation);
    }
}

TEST_CASE("witness pipeline on randomized conforming inputs") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> num(1, 4);
    const Rational rvals[4] = {rat(1), rat(-1), rat(2), rat(-1, 2)};
    for (long n : {3L, 4L, 5L}) {
        RingSpec blow = make_blowup_ring(n, rat(1, 2));
        RRing ring(n, rat(1, 2));
        for (int trial = 0; trial < 15; ++trial) {
            Exponent ktmax = rat(num(rng));
            Exponent kappa0 = ring.delta + rat(num(rng), 2);
            Rational r0 = rvals[static_cast<std::size_t>(num(rng)) % 4];
            // leading -E (x) q t^{K}, unit coefficient r0 t^{K-kappa0}, and an
            // E-power tail term at energy >= delta
            SeidelElement s = seidel_from_leading(blow, *blow.basis_index("E"), 1,
                                                  {ktmax, -ktmax}, {}, rat(-1));
            NovikovElement lambda = NovikovElement::monomial(r0, 0, ktmax - kappa0);
            s.element.set_coeff(blow.unit_index, lambda);
            if (n > 2) {
                std::size_t eps_idx = 0;
                for (std::size_t i = 0; i < blow.dim(); ++i)
                    if (blow.basis[i].e_power && *blow.basis[i].e_power == n - 1) eps_idx = i;
                s.element.set_coeff(
                    eps_idx, NovikovElement::monomial(rat(num(rng)), n - 1,
                                                      ktmax - kappa0 - ring.delta));
            }
            Exponent floor = kappa0 - 10 * ring.delta;
            RElement u = su_unit_normalize(s, ring, blow, floor);
            auto witness = extract_inverse_witness(u, ring, kappa0, floor);
            CHECK(witness.class_energy == kappa0 - ring.delta);
            CHECK(witness.s_power == (n == 2 ? 1 : n - 2));
            // r of the normalized unit is -1/r0
            CHECK(witness.coefficient == -r0);
        }
    }
}
