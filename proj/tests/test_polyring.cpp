#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toricchar/charclass.hpp"
#include "toricchar/fan.hpp"
#include "toricchar/polynomial.hpp"

using namespace toricchar;

namespace {

RingPtr ring_of(const std::string& space) {
    Fan fan = Fan::from_shorthand(space);
    return cox_ring(fan, PrimeField());
}

Polynomial rand_poly(const RingPtr& ring, SeededRng& rng, int maxdeg, int terms) {
    Polynomial p(ring);
    for (int t = 0; t < terms; ++t) {
        std::vector<Exp> e(ring->nvars(), 0);
        for (int v = 0; v < ring->nvars(); ++v)
            e[v] = static_cast<Exp>(rng.below(maxdeg + 1));
        p.push_term(e, static_cast<std::uint32_t>(rng.below(ring->field().p())));
    }
    p.finalize();
    return p;
}

} // namespace

TEST_CASE("parse: three-term bidegree form in the P4xP2 ring") {
    RingPtr R = ring_of("P4xP2");
    Polynomial f = parse_polynomial("17*x0*y0*y2 - 3*x1*y0*y2 + 9*x3*y0*y2", R);
    CHECK(f.nterms() == 3);
    CHECK(f.multidegree() == DegVec{1, 2});
    // the unicode minus sign is accepted too
    Polynomial g = parse_polynomial("17*x0*y0*y2 − 3*x1*y0*y2 + 9*x3*y0*y2", R);
    CHECK(f == g);
}

TEST_CASE("parse: zero and cancellation") {
    RingPtr R = ring_of("P2");
    CHECK(parse_polynomial("0", R).is_zero());
    CHECK(parse_polynomial("x0^2 - x0^2", R).is_zero());
    CHECK(parse_polynomial("(x0 + x1)*(x0 - x1) - x0^2 + x1^2", R).is_zero());
}

TEST_CASE("parse: error cases") {
    RingPtr R = ring_of("P2");
    CHECK_THROWS_AS(parse_polynomial("x0 + q3", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0 + ", R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0 ** 2", R), ParseError);
}

TEST_CASE("multidegree: products of projective spaces") {
    RingPtr R = ring_of("P4xP2");
    CHECK(parse_polynomial("x0*y0*y2", R).multidegree() == DegVec{1, 2});
    RingPtr S = ring_of("P1xP1");
    CHECK_THROWS_AS(parse_polynomial("x0 + y0", S).multidegree(), NotHomogeneousError);
    CHECK_THROWS_AS(Polynomial::zero(S).multidegree(), ZeroPolynomialError);
}

TEST_CASE("multidegree: the smooth Fano fourfold grading") {
    Fan fan = Fan::from_json_file(DATA_DIR "/fano4_7.json");
    RingPtr R = cox_ring(fan, PrimeField());
    CHECK(R->degree_of_var(0) == DegVec{1, -1});
    CHECK(R->degree_of_var(1) == DegVec{1, 0});
    CHECK(R->degree_of_var(2) == DegVec{1, 0});
    CHECK(R->degree_of_var(3) == DegVec{0, 1});
    CHECK(R->degree_of_var(4) == DegVec{0, 1});
    CHECK(R->degree_of_var(5) == DegVec{0, 1});
    Polynomial f = parse_polynomial("x2^3*x3*x4^9", R);
    CHECK(f.multidegree() == DegVec{3, 10});
}

TEST_CASE("random_form: forced support on P1xP1") {
    RingPtr R = ring_of("P1xP1");
    SeededRng rng(7);
    Polynomial f = random_form({1, 0}, R, rng);
    CHECK(f.nterms() == 2); // x0, x1 with nonzero coefficients
    Polynomial g = random_form({1, 1}, R, rng);
    CHECK(g.nterms() == 4);
    CHECK_THROWS_AS(random_form({-1, 0}, R, rng), EmptyDegreeError);
}

TEST_CASE("random_form: degree (0,1) on the Fano fourfold has support x3,x4,x5") {
    Fan fan = Fan::from_json_file(DATA_DIR "/fano4_7.json");
    RingPtr R = cox_ring(fan, PrimeField());
    auto monos = R->monomials_of_degree({0, 1});
    REQUIRE(monos.size() == 3);
    for (const auto& e : monos) {
        CHECK(e[0] == 0);
        CHECK(e[1] == 0);
        CHECK(e[2] == 0);
        CHECK(e[3] + e[4] + e[5] == 1);
    }
    // degree (1,0) forms are not linear here: x1, x2, x0*x3, x0*x4, x0*x5
    CHECK(R->monomials_of_degree({1, 0}).size() == 5);
    SeededRng rng(3);
    CHECK(random_form({0, 1}, R, rng).nterms() == 3);
}

TEST_CASE("random_form: deterministic per seed, varying across seeds") {
    RingPtr R = ring_of("P2xP1");
    SeededRng a1(42), a2(42), b(43);
    Polynomial f1 = random_form({2, 1}, R, a1);
    Polynomial f2 = random_form({2, 1}, R, a2);
    Polynomial g = random_form({2, 1}, R, b);
    CHECK(f1 == f2);
    CHECK(f1 != g);
}

TEST_CASE("ring axioms on randomized inputs") {
    RingPtr R = ring_of("P2");
    SeededRng rng(11);
    for (int round = 0; round < 30; ++round) {
        Polynomial f = rand_poly(R, rng, 4, 5);
        Polynomial g = rand_poly(R, rng, 4, 5);
        Polynomial h = rand_poly(R, rng, 4, 5);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f + (-f)).is_zero());
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("multidegree is additive on products") {
    RingPtr R = ring_of("P2xP3");
    SeededRng rng(5);
    for (int round = 0; round < 10; ++round) {
        DegVec a{static_cast<long long>(rng.below(3)), static_cast<long long>(rng.below(3))};
        DegVec b{static_cast<long long>(1 + rng.below(2)), static_cast<long long>(rng.below(2))};
        Polynomial f = random_form(a, R, rng);
        Polynomial g = random_form(b, R, rng);
        DegVec sum{a[0] + b[0], a[1] + b[1]};
        CHECK((f * g).multidegree() == sum);
    }
}

TEST_CASE("parse-render round trip") {
    RingPtr R = ring_of("P2xP2");
    SeededRng rng(17);
    for (int round = 0; round < 20; ++round) {
        Polynomial f = rand_poly(R, rng, 3, 6);
        CHECK(parse_polynomial(f.render(), R) == f);
    }
    CHECK(parse_polynomial(Polynomial::zero(R).render(), R).is_zero());
}

TEST_CASE("derivative and substitution basics") {
    RingPtr R = ring_of("P2");
    Polynomial f = parse_polynomial("x0^3 + 2*x0*x1*x2", R);
    CHECK(f.derivative(0) == parse_polynomial("3*x0^2 + 2*x1*x2", R));
    // substitute x2 := x0 + x1
    Polynomial g = f.substitute(2, parse_polynomial("x0 + x1", R));
    CHECK(g == parse_polynomial("x0^3 + 2*x0*x1*(x0 + x1)", R));
}
