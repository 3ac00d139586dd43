#include "qh/tables.hpp"

#include "qh/errors.hpp"

#include <algorithm>
#include <set>

namespace qh {

RingSpec make_blowup_ring(long n, const Exponent& delta, const Rational& scale) {
    if (n < 2) throw ValidationError("blow-up table needs n >= 2");
    RingSpec spec;
    spec.n = n;
    spec.basis.push_back({"pt", 0, std::nullopt});
    // E^{n-1} (the line) through E^1, ascending degree
    for (long k = n - 1; k >= 1; --k) {
        std::string name = (k == 1) ? "E" : "E^" + std::to_string(k);
        spec.basis.push_back({name, 2 * (n - k), k});
    }
    spec.basis.push_back({"1l", 2 * n, 0L});
    std::size_t dim = spec.basis.size();
    auto epow_at = [&](std::size_t idx) { return *spec.basis[idx].e_power; };

    spec.pairing = Mat(dim, Vec(dim, Rational(0)));
    spec.pairing[0][dim - 1] = spec.pairing[dim - 1][0] = 1; // pt . 1l
    for (std::size_t i = 1; i + 1 < dim; ++i)
        for (std::size_t j = 1; j + 1 < dim; ++j)
            if (epow_at(i) + epow_at(j) == n) spec.pairing[i][j] = -1;

    EffectiveClass eps;
    eps.label = "eps";
    eps.omega = delta;
    eps.chern = n - 1;
    eps.divisor_pairings["E"] = -1; // line in E against the divisor E
    spec.classes.push_back(eps);

    // All admissible triples without the unit are stored, so that absence
    // never masquerades as a zero.  Classical E-power triples with i+j+k = n
    // pair complementary powers to -1; on the line class only all-E triples
    // with i+j+k = 2n-1 count (lines in E meet nothing outside E).
    spec.unit_index = dim - 1;
    auto all_e = [&](std::size_t a, std::size_t b, std::size_t c) {
        return a > 0 && b > 0 && c > 0;
    };
    for (std::size_t a = 0; a + 1 < dim; ++a)
        for (std::size_t b = a; b + 1 < dim; ++b)
            for (std::size_t c = b; c + 1 < dim; ++c) {
                if (spec.admissible3(kZeroClass, a, b, c)) {
                    Rational v = (all_e(a, b, c) && epow_at(a) + epow_at(b) + epow_at(c) == n)
                                     ? Rational(-1)
                                     : Rational(0);
                    spec.gw3[make_gw3_key(kZeroClass, a, b, c)] = v;
                }
                if (spec.admissible3(0, a, b, c)) {
                    Rational v =
                        (all_e(a, b, c) && epow_at(a) + epow_at(b) + epow_at(c) == 2 * n - 1)
                            ? -scale
                            : Rational(0);
                    spec.gw3[make_gw3_key(0, a, b, c)] = v;
                }
            }

    spec.wdvv_mode = WdvvMode::Error; // this table is honestly associative
    spec.validate();
    return spec;
}

RingSpec make_sphere_ring(const std::vector<std::pair<Exponent, Rational>>& point_invariants) {
    RingSpec spec;
    spec.n = 1;
    spec.basis.push_back({"pt", 0, std::nullopt});
    spec.basis.push_back({"1l", 2, std::nullopt});
    spec.pairing = Mat{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    long p = 0;
    for (const auto& [omega, value] : point_invariants) {
        EffectiveClass c;
        c.label = "L" + std::to_string(++p);
        c.omega = omega;
        c.chern = 2;
        spec.classes.push_back(c);
        spec.gw3[make_gw3_key(p - 1, 0, 0, 0)] = value;
    }
    spec.wdvv_mode = WdvvMode::Error;
    spec.validate();
    return spec;
}

RingSpec make_plane_ring(const Exponent& omega, const Rational& v) {
    RingSpec spec;
    spec.n = 2;
    spec.basis.push_back({"pt", 0, std::nullopt});
    spec.basis.push_back({"h", 2, std::nullopt});
    spec.basis.push_back({"1l", 4, std::nullopt});
    spec.pairing = Mat(3, Vec(3, Rational(0)));
    spec.pairing[0][2] = spec.pairing[2][0] = 1;
    spec.pairing[1][1] = 1;
    EffectiveClass line{"line", omega, 3, {}};
    spec.classes.push_back(line);
    spec.gw3[make_gw3_key(0, 0, 0, 1)] = v;
    spec.wdvv_mode = WdvvMode::Error;
    spec.validate();
    return spec;
}

RingSpec make_projective_space_ring(long k, std::size_t idle_classes) {
    RingSpec spec;
    spec.n = k;
    for (long i = 0; i <= k; ++i) {
        std::string name = (i == 0) ? "pt" : (i == k ? "1l" : "P" + std::to_string(i));
        spec.basis.push_back({name, 2 * i, std::nullopt});
    }
    std::size_t dim = spec.basis.size();
    spec.pairing = Mat(dim, Vec(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) spec.pairing[i][dim - 1 - i] = 1;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b)
            for (std::size_t c = b; c < dim; ++c) {
                if (a + b + c != static_cast<std::size_t>(2 * k)) continue;
                if (a == 0 || c + 1 == dim) continue; // pt/unit slots follow from the pairing
                spec.gw3[make_gw3_key(kZeroClass, a, b, c)] = 1;
            }
    for (std::size_t i = 0; i < idle_classes; ++i) {
        EffectiveClass c;
        c.label = "idle" + std::to_string(i + 1);
        c.omega = Exponent(static_cast<long>(i) + 1) + Exponent(1, 2);
        c.chern = 2 * k + 1; // dimension filter leaves no admissible triple
        spec.classes.push_back(c);
    }
    spec.wdvv_mode = WdvvMode::Error;
    spec.validate();
    return spec;
}

namespace {

Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    long c = num(rng);
    if (c == 0) c = 1;
    return rat(c, den(rng));
}

Exponent random_omega(std::mt19937_64& rng, std::set<Exponent>& used) {
    std::uniform_int_distribution<long> num(1, 24);
    std::uniform_int_distribution<long> den(1, 4);
    while (true) {
        Exponent w = rat(num(rng), den(rng));
        if (used.insert(w).second) return w;
    }
}

} // namespace

RingSpec random_associative_ring(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 4);
    std::set<Exponent> used;
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<long> nn(2, 4);
            return make_blowup_ring(nn(rng), random_omega(rng, used));
        }
        case 1: {
            std::uniform_int_distribution<int> cnt(1, 3);
            std::uniform_int_distribution<int> zero(0, 2);
            std::vector<std::pair<Exponent, Rational>> pts;
            int m = cnt(rng);
            for (int i = 0; i < m; ++i)
                pts.push_back({random_omega(rng, used),
                               zero(rng) == 0 ? Rational(0) : random_nonzero(rng)});
            return make_sphere_ring(pts);
        }
        case 2:
            return make_plane_ring(random_omega(rng, used), random_nonzero(rng));
        case 3: {
            std::uniform_int_distribution<long> kk(2, 4);
            std::uniform_int_distribution<int> idle(0, 2);
            return make_projective_space_ring(kk(rng), idle(rng));
        }
        default: {
            std::uniform_int_distribution<long> nn(2, 3);
            return make_blowup_ring(nn(rng), random_omega(rng, used), random_nonzero(rng));
        }
    }
}

RingSpec random_admissible_ring(std::mt19937_64& rng) {
    RingSpec spec;
    std::uniform_int_distribution<long> nn(1, 3);
    spec.n = nn(rng);
    spec.basis.push_back({"pt", 0, std::nullopt});
    // one middle class per positive degree below the top, randomly kept
    std::uniform_int_distribution<int> keep(0, 1);
    for (long d = 2; d < 2 * spec.n; d += 2)
        if (keep(rng)) spec.basis.push_back({"m" + std::to_string(d), d, std::nullopt});
    spec.basis.push_back({"1l", 2 * spec.n, std::nullopt});
    std::size_t dim = spec.basis.size();
    spec.pairing = Mat(dim, Vec(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            if (spec.basis[i].degree + spec.basis[j].degree != 2 * spec.n) continue;
            if (spec.pairing[i][j] != 0) continue;
            Rational v = random_nonzero(rng);
            spec.pairing[i][j] = v;
            spec.pairing[j][i] = v;
        }
    }
    if (!mat_inverse(spec.pairing)) return random_admissible_ring(rng); // rare; try again
    std::uniform_int_distribution<int> ncls(1, 3);
    std::uniform_int_distribution<long> chern(0, 2 * spec.n);
    std::set<Exponent> used;
    int m = ncls(rng);
    for (int i = 0; i < m; ++i) {
        EffectiveClass c;
        c.label = "b" + std::to_string(i + 1);
        c.omega = random_omega(rng, used);
        c.chern = chern(rng);
        spec.classes.push_back(c);
    }
    std::uniform_int_distribution<int> zero(0, 2);
    for (long ci = kZeroClass; ci < static_cast<long>(spec.classes.size()); ++ci) {
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = a; b < dim; ++b)
                for (std::size_t c = b; c < dim; ++c) {
                    if (!spec.admissible3(ci, a, b, c)) continue;
                    if (c + 1 == dim) continue; // unit slots follow from axiom/pairing
                    spec.gw3[make_gw3_key(ci, a, b, c)] =
                        zero(rng) == 0 ? Rational(0) : random_nonzero(rng);
                }
    }
    spec.wdvv_mode = WdvvMode::Off;
    spec.validate();
    return spec;
}

} // namespace qh
