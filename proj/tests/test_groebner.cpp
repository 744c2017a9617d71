#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toricchar/fan.hpp"
#include "toricchar/groebner.hpp"

using namespace toricchar;

namespace {

RingPtr plain_ring(std::initializer_list<std::string> names) {
    std::vector<std::string> ns(names);
    std::vector<DegVec> degs(ns.size(), DegVec{1});
    return GradedRing::make(ns, degs, PrimeField());
}

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(s, R); }

bool reduced_basis_certificate(const GroebnerBasis& G) {
    // generators monic, no leading term divides another, tails irreducible:
    // checked indirectly via normal forms against the rest of the basis
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        GroebnerBasis rest = G;
        rest.elements.erase(rest.elements.begin() + static_cast<std::ptrdiff_t>(i));
        if (normal_form(G.elements[i], rest) != G.elements[i]) return false;
    }
    return true;
}

} // namespace

TEST_CASE("groebner basis: inputs that are already bases") {
    RingPtr R = plain_ring({"x", "y"});
    GroebnerBasis G = groebner_basis(Ideal(R, {P(R, "x^2"), P(R, "x*y")}));
    REQUIRE(G.elements.size() == 2);
    CHECK(G.elements[0] == P(R, "x*y"));
    CHECK(G.elements[1] == P(R, "x^2"));

    GroebnerBasis H = groebner_basis(Ideal(R, {P(R, "x - y"), P(R, "y^2")}));
    REQUIRE(H.elements.size() == 2);
    CHECK(reduced_basis_certificate(H));
    for (const auto& g : {P(R, "x - y"), P(R, "y^2")})
        CHECK(normal_form(g, H).is_zero());
}

TEST_CASE("groebner basis: twisted cubic under lex z>y>x") {
    // earlier variable index = lex-larger, so order the names z, y, x
    RingPtr R = plain_ring({"z", "y", "x"});
    Ideal I(R, {P(R, "y - x^2"), P(R, "z - x^3")});
    GroebnerBasis G = groebner_basis(I, MonomialOrder::lex());
    bool has_y = false, has_z = false;
    for (const auto& g : G.elements) {
        if (g == P(R, "y - x^2")) has_y = true;
        if (g == P(R, "z - x^3")) has_z = true;
    }
    CHECK(has_y);
    CHECK(has_z);
}

TEST_CASE("normal form examples") {
    RingPtr R = plain_ring({"x", "y"});
    GroebnerBasis G = groebner_basis(Ideal(R, {P(R, "x^2"), P(R, "x*y")}));
    CHECK(normal_form(P(R, "x^2"), G).is_zero());

    GroebnerBasis H = groebner_basis(Ideal(R, {P(R, "x^2")}));
    CHECK(normal_form(P(R, "x + 1"), H) == P(R, "x + 1"));

    GroebnerBasis K = groebner_basis(Ideal(R, {P(R, "x^2 - y")}));
    CHECK(normal_form(P(R, "x^3"), K) == P(R, "x*y"));
}

TEST_CASE("normal form is idempotent") {
    RingPtr R = plain_ring({"x", "y", "z"});
    SeededRng rng(23);
    auto rnd = [&]() {
        Polynomial p(R);
        for (int t = 0; t < 5; ++t) {
            std::vector<Exp> e{static_cast<Exp>(rng.below(3)), static_cast<Exp>(rng.below(3)),
                               static_cast<Exp>(rng.below(3))};
            p.push_term(e, static_cast<std::uint32_t>(rng.below(R->field().p())));
        }
        p.finalize();
        return p;
    };
    for (int round = 0; round < 10; ++round) {
        Ideal I(R, {rnd(), rnd()});
        GroebnerBasis G = groebner_basis(I);
        Polynomial f = rnd();
        Polynomial n1 = normal_form(f, G);
        CHECK(normal_form(n1, G) == n1);
    }
}

TEST_CASE("random ideals: generators reduce to zero, basis is reduced") {
    RingPtr R = plain_ring({"x", "y", "z"});
    SeededRng rng(31);
    auto rnd = [&]() {
        Polynomial p(R);
        for (int t = 0; t < 4; ++t) {
            std::vector<Exp> e{static_cast<Exp>(rng.below(3)), static_cast<Exp>(rng.below(3)),
                               static_cast<Exp>(rng.below(2))};
            p.push_term(e, static_cast<std::uint32_t>(rng.below(R->field().p())));
        }
        p.finalize();
        return p;
    };
    for (int round = 0; round < 6; ++round) {
        Ideal I(R, {rnd(), rnd(), rnd()});
        GroebnerBasis G = groebner_basis(I);
        CHECK(reduced_basis_certificate(G));
        for (const auto& f : I.generators) CHECK(normal_form(f, G).is_zero());
    }
}

TEST_CASE("quotient dimension: simple staircases") {
    RingPtr R1 = plain_ring({"x"});
    CHECK(quotient_dim(groebner_basis(Ideal(R1, {P(R1, "x - 1")}))) == 1);

    RingPtr R = plain_ring({"x", "y"});
    CHECK(quotient_dim(groebner_basis(Ideal(R, {P(R, "x^2"), P(R, "y^2")}))) == 4);
    CHECK(quotient_dim(groebner_basis(Ideal(R, {P(R, "x^2")}))) == kInfiniteDim);
    CHECK(quotient_dim(groebner_basis(Ideal(R, {P(R, "x - 1"), P(R, "x - 2")}))) == 0);
}

TEST_CASE("quotient dimension: Bezout count for plane cubics") {
    // two general cubics in P^2 meet in 9 points; the dehomogenizing form
    // pins homogeneous coordinates and the Rabinowitsch factor built from an
    // independent general form removes nothing
    Fan fan = Fan::from_shorthand("P2");
    RingPtr R = cox_ring(fan, PrimeField());
    SeededRng rng(101);
    Polynomial f = random_form({3}, R, rng);
    Polynomial g = random_form({3}, R, rng);
    Polynomial u = random_form({3}, R, rng);

    RingPtr ext = R->with_suffix_var("T");
    std::vector<int> up{0, 1, 2};
    Ideal LA = dehomogenizing_ideal(fan, R, rng);
    Ideal I(ext);
    I.add(f.mapped(ext, up));
    I.add(g.mapped(ext, up));
    I.add(Polynomial::constant(ext, 1) - Polynomial::variable(ext, 3) * u.mapped(ext, up));
    for (const auto& l : LA.generators) I.add(l.mapped(ext, up));
    CHECK(quotient_dim(groebner_basis(I)) == 9);
}

TEST_CASE("quotient dimension: d^n Bezout oracle in P^n") {
    for (int n = 2; n <= 3; ++n) {
        for (int d = 2; d <= 3; ++d) {
            Fan fan = Fan::product_of_projective_spaces({n});
            RingPtr R = cox_ring(fan, PrimeField());
            SeededRng rng(200 + 10 * n + d);
            std::vector<Polynomial> forms;
            for (int i = 0; i < n; ++i) forms.push_back(random_form({d}, R, rng));
            Polynomial u = random_form({d}, R, rng);
            RingPtr ext = R->with_suffix_var("T");
            std::vector<int> up(R->nvars());
            for (int i = 0; i < R->nvars(); ++i) up[i] = i;
            Ideal I(ext);
            for (const auto& f : forms) I.add(f.mapped(ext, up));
            I.add(Polynomial::constant(ext, 1) -
                  Polynomial::variable(ext, ext->nvars() - 1) * u.mapped(ext, up));
            for (const auto& l : dehomogenizing_ideal(fan, R, rng).generators)
                I.add(l.mapped(ext, up));
            std::uint64_t expect = 1;
            for (int i = 0; i < n; ++i) expect *= static_cast<std::uint64_t>(d);
            CHECK(quotient_dim(groebner_basis(I)) == expect);
        }
    }
}

TEST_CASE("quotient dimension agrees between degrevlex and lex") {
    RingPtr R = plain_ring({"x", "y"});
    SeededRng rng(77);
    auto tail = [&](int cap) {
        Polynomial p(R);
        for (int t = 0; t < 3; ++t) {
            std::vector<Exp> e{static_cast<Exp>(rng.below(cap)), static_cast<Exp>(rng.below(cap))};
            p.push_term(e, static_cast<std::uint32_t>(rng.below(R->field().p())));
        }
        p.finalize();
        return p;
    };
    for (int round = 0; round < 6; ++round) {
        // guaranteed zero dimensional: pure powers plus random lower tails
        Ideal I(R, {P(R, "x^3") + tail(3), P(R, "y^3") + tail(3)});
        std::uint64_t d1 = quotient_dim(groebner_basis(I, MonomialOrder::degrevlex()));
        std::uint64_t d2 = quotient_dim(groebner_basis(I, MonomialOrder::lex()));
        CHECK(d1 == d2);
    }
}

TEST_CASE("ideal membership") {
    Fan fan = Fan::from_shorthand("P2");
    RingPtr R = cox_ring(fan, PrimeField());
    CHECK(ideal_membership(P(R, "x0^2*x1"), Ideal(R, {P(R, "2*x0*x1"), P(R, "x0^2")})));
    CHECK_FALSE(ideal_membership(P(R, "1"), Ideal(R, {P(R, "x0"), P(R, "x1")})));
}

TEST_CASE("Euler relation: f lies in its own partial-derivative ideal") {
    Fan fan = Fan::from_json_file(DATA_DIR "/fano4_7.json");
    RingPtr R = cox_ring(fan, PrimeField());
    SeededRng rng(55);
    for (int round = 0; round < 5; ++round) {
        Polynomial f = random_form({1 + static_cast<long long>(rng.below(2)),
                                    1 + static_cast<long long>(rng.below(2))},
                                   R, rng);
        Ideal partials(R);
        for (int v = 0; v < R->nvars(); ++v) {
            Polynomial d = f.derivative(v);
            if (!d.is_zero()) partials.add(d);
        }
        CHECK(ideal_membership(f, partials));
    }
}

TEST_CASE("saturation by a polynomial") {
    Fan fan = Fan::from_shorthand("P2");
    RingPtr R = cox_ring(fan, PrimeField());
    Ideal I(R, {P(R, "x0^2*x1")});
    Ideal S = saturate(I, P(R, "x0"));
    CHECK(ideal_equal(S, Ideal(R, {P(R, "x1")})));

    Ideal J(R, {P(R, "x0^2")});
    CHECK(contains_one(saturate(J, P(R, "x0"))));

    // (x0*f) : x0^inf = (f) for f coprime to x0, via reduced-basis equality
    SeededRng rng(9);
    Polynomial f = random_form({2}, R, rng);
    Ideal K = saturate(Ideal(R, {P(R, "x0") * f}), P(R, "x0"));
    CHECK(ideal_equal(K, Ideal(R, {f})));
}

TEST_CASE("saturation is idempotent and contains the ideal") {
    Fan fan = Fan::from_shorthand("P1xP1");
    RingPtr R = cox_ring(fan, PrimeField());
    Ideal I(R, {P(R, "x0^2*y0"), P(R, "x0*y1^2")});
    Polynomial f = P(R, "x0*y0");
    Ideal S1 = saturate(I, f);
    Ideal S2 = saturate(S1, f);
    CHECK(ideal_equal(S1, S2));
    for (const auto& g : I.generators) CHECK(ideal_membership(g, S1));
}

TEST_CASE("saturation by the irrelevant ideal") {
    Fan fan = Fan::from_shorthand("P1xP1");
    RingPtr R = cox_ring(fan, PrimeField());
    Ideal B = irrelevant_ideal(fan, R);

    Ideal I(R, {P(R, "x0*y0"), P(R, "x0*y1")});
    Ideal S = saturate_by_ideal(I, B);
    CHECK(ideal_equal(S, Ideal(R, {P(R, "x0")})));

    // already saturated ideals are fixed points
    Ideal T(R, {P(R, "x0")});
    CHECK(ideal_equal(saturate_by_ideal(T, B), T));

    // the irrelevant ideal saturates to the unit ideal
    CHECK(contains_one(saturate_by_ideal(B, B)));
}
