#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toricchar/chow.hpp"

using namespace toricchar;

namespace {

ChowRingPtr ring_for(const Fan& fan) { return ChowRing::build(fan, cox_ring(fan, PrimeField())); }

ChowRingPtr ring_for(const std::string& space) { return ring_for(Fan::from_shorthand(space)); }

ChowRingPtr fano_ring() { return ring_for(Fan::from_json_file(DATA_DIR "/fano4_7.json")); }

} // namespace

TEST_CASE("presentation of A*(P4xP2)") {
    ChowRingPtr R = ring_for("P4xP2");
    CHECK(R->q() == 2);
    CHECK(R->ncones() == 15);
    CHECK(R->ranks() == std::vector<int>{1, 2, 3, 3, 3, 2, 1});
    CHECK(R->parse_class("h1^5").is_zero());
    CHECK(R->parse_class("h2^3").is_zero());
    CHECK(R->point_class() == R->parse_class("h1^4*h2^2"));
    CHECK(R->render(R->point_class()) == "h1^4*h2^2");
}

TEST_CASE("presentation of the Fano fourfold ring") {
    ChowRingPtr R = fano_ring();
    CHECK(R->ranks() == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(R->ncones() == 9);
    // relations: x0 = h2 - h5, x1 = h2, x3 = x4 = h5
    CHECK(R->var_class(0) == R->parse_class("h2 - h5"));
    CHECK(R->var_class(1) == R->parse_class("h2"));
    CHECK(R->var_class(4) == R->parse_class("h5"));
    // rewriting h2^3 = h2^2*h5 and h5^3 = 0
    CHECK(R->parse_class("h2^3") == R->parse_class("h2^2*h5"));
    CHECK(R->parse_class("h5^3").is_zero());
    CHECK(R->point_class() == R->parse_class("h2^2*h5^2"));
    // the intersection number behind the non-orthogonal pairing
    CHECK(R->degree(R->parse_class("h2^3*h5")) == 1);
}

TEST_CASE("presentation of A*(P1)") {
    ChowRingPtr R = ring_for("P1");
    CHECK(R->ranks() == std::vector<int>{1, 1});
    CHECK(R->parse_class("h1^2").is_zero());
    CHECK(R->point_class() == R->parse_class("h1"));
}

TEST_CASE("point class of P1xP1xP1") {
    ChowRingPtr R = ring_for("P1xP1xP1");
    CHECK(R->point_class() == R->parse_class("h1*h2*h3"));
    CHECK(R->point_exponents() == std::vector<Exp>{1, 1, 1});
}

TEST_CASE("degree map") {
    ChowRingPtr R = ring_for("P4xP2");
    CHECK(R->degree(R->point_class()) == 1);
    CHECK(R->degree(R->parse_class("h1^2*h2")) == 0);
    CHECK(R->degree(R->parse_class("7*h1^4*h2^2 + 3*h1")) == 7);
}

TEST_CASE("chern class of the tangent bundle") {
    ChowRingPtr P2 = ring_for("P2");
    CHECK(P2->chern_tangent() == P2->parse_class("1 + 3*h1 + 3*h1^2"));

    ChowRingPtr P11 = ring_for("P1xP1");
    CHECK(P11->chern_tangent() == P11->parse_class("1 + 2*h1 + 2*h2 + 4*h1*h2"));

    ChowRingPtr F = fano_ring();
    CHECK(F->chern_tangent() ==
          F->parse_class("(1 + h2 - h5)*(1 + h2)^2*(1 + h5)^3"));
}

TEST_CASE("degree of the tangent class counts maximal cones") {
    for (const char* space : {"P2", "P5", "P1xP1", "P2xP1", "P1xP1xP1"}) {
        ChowRingPtr R = ring_for(space);
        CHECK(R->degree(R->chern_tangent()) == R->ncones());
    }
    ChowRingPtr F = fano_ring();
    CHECK(F->degree(F->chern_tangent()) == 9);
}

TEST_CASE("invert_unit") {
    ChowRingPtr P2 = ring_for("P2");
    CHECK(P2->invert_unit(P2->parse_class("1 + h1")) == P2->parse_class("1 - h1 + h1^2"));
    CHECK(P2->invert_unit(P2->one()) == P2->one());
    CHECK_THROWS_AS(P2->invert_unit(P2->parse_class("2 + h1")), NotAUnitError);

    ChowRingPtr F = fano_ring();
    ChowClass u = F->parse_class("1 + 3*h2 + 10*h5");
    CHECK(F->invert_unit(u) * u == F->one());

    // randomized units, both signs
    SeededRng rng(3);
    for (int round = 0; round < 10; ++round) {
        ChowClass v = F->one();
        for (int k = 0; k < F->q(); ++k) {
            std::vector<Exp> e(F->q(), 0);
            e[k] = 1;
            v = v + F->monomial_class(e, static_cast<long long>(rng.below(9)) - 4);
        }
        if (round % 2) v = -v;
        CHECK(F->invert_unit(v) * v == F->one());
    }
}

TEST_CASE("reduce is a ring homomorphism") {
    ChowRingPtr F = fano_ring();
    SeededRng rng(5);
    auto rnd = [&]() {
        ChowClass c = F->from_int(static_cast<long long>(rng.below(5)));
        for (int t = 0; t < 4; ++t) {
            std::vector<Exp> e(F->q(), 0);
            for (int k = 0; k < F->q(); ++k) e[k] = static_cast<Exp>(rng.below(3));
            c = c + F->monomial_class(e, static_cast<long long>(rng.below(11)) - 5);
        }
        return c;
    };
    for (int round = 0; round < 12; ++round) {
        ChowClass a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("rank consistency across the corpus") {
    for (const char* space : {"P1", "P3", "P1xP1", "P4xP2", "P2xP2xP2"}) {
        ChowRingPtr R = ring_for(space);
        int total = 0;
        for (int d = 0; d <= R->dim(); ++d) total += R->rank(d);
        CHECK(total == R->ncones());
    }
}

TEST_CASE("orthogonality of the complementary cycles on products") {
    for (const char* space : {"P3", "P1xP1", "P4xP2", "P2xP1"}) {
        ChowRingPtr R = ring_for(space);
        CHECK(R->orthogonal_everywhere());
        for (int iota = 0; iota <= R->dim(); ++iota) {
            const auto& om = R->omega(iota);
            CHECK(static_cast<int>(om.size()) == R->rank(iota));
            for (std::size_t i = 0; i < om.size(); ++i)
                for (std::size_t j = 0; j < om.size(); ++j) {
                    ChowClass prod = R->omega_class(iota, static_cast<int>(j)) *
                                     R->complementary_class(iota, static_cast<int>(i));
                    if (i == j) CHECK(prod == R->point_class());
                    else CHECK(prod.is_zero());
                }
        }
    }
}

TEST_CASE("the Fano fourfold pairing is non-orthogonal but unimodular") {
    // deg(h2^3 * h5) = 1 makes a delta-orthogonal monomial basis impossible
    // at codimension one; the exact pairing solve takes over
    ChowRingPtr F = fano_ring();
    CHECK_FALSE(F->orthogonal_everywhere());
    CHECK_FALSE(F->orthogonal(1));
    CHECK(F->gram(1) == std::vector<std::vector<long long>>{{1, 0}, {1, 1}});
    // counts measured for [Y] = 2*h2 + 9*h5 against the pairing
    CHECK(F->extract_gammas(1, {2, 11}) == std::vector<long long>{2, 9});
    // orthogonal codimensions pass counts through unchanged
    CHECK(F->extract_gammas(0, {5}) == std::vector<long long>{5});
}

TEST_CASE("complementary data sizes") {
    ChowRingPtr R = ring_for("P4xP2");
    // omega = h1^2*h2 has complement h1^2*h2 relative to zeta = h1^4*h2^2
    int iota = 3;
    const auto& om = R->omega(iota);
    std::size_t idx = om.size();
    for (std::size_t i = 0; i < om.size(); ++i)
        if (om[i] == std::vector<Exp>{2, 1}) idx = i;
    REQUIRE(idx < om.size());
    CHECK(R->complementary_exponents(iota, static_cast<int>(idx)) == std::vector<Exp>{2, 1});
    SeededRng rng(8);
    Ideal L = R->complementary_ideal(iota, static_cast<int>(idx), rng);
    CHECK(L.generators.size() == 3); // two (1,0)-forms and one (0,1)-form
    CHECK(L.generators[0].multidegree() == DegVec{1, 0});
    CHECK(L.generators[1].multidegree() == DegVec{1, 0});
    CHECK(L.generators[2].multidegree() == DegVec{0, 1});

    // omega = 1 at iota = 0 has complement zeta itself
    CHECK(R->complementary_exponents(0, 0) == std::vector<Exp>{4, 2});
    Ideal L0 = R->complementary_ideal(0, 0, rng);
    CHECK(L0.generators.size() == 6);

    ChowRingPtr F = fano_ring();
    const auto& om2 = F->omega(2);
    std::size_t id2 = om2.size();
    for (std::size_t i = 0; i < om2.size(); ++i)
        if (om2[i] == std::vector<Exp>{1, 1}) id2 = i;
    REQUIRE(id2 < om2.size());
    CHECK(F->complementary_exponents(2, static_cast<int>(id2)) == std::vector<Exp>{1, 1});
    Ideal LF = F->complementary_ideal(2, static_cast<int>(id2), rng);
    CHECK(LF.generators.size() == 2);
    CHECK(LF.generators[0].multidegree() == DegVec{1, 0});
    CHECK(LF.generators[1].multidegree() == DegVec{0, 1});
}

TEST_CASE("class parsing accepts Cox variables") {
    ChowRingPtr F = fano_ring();
    CHECK(F->parse_class("x0") == F->parse_class("h2 - h5"));
    CHECK(F->parse_class("x0*x1*x2").is_zero()); // Stanley-Reisner relation
    CHECK(F->parse_class("x3*x4*x5").is_zero());
    CHECK_THROWS_AS(F->parse_class("bogus"), ParseError);
}

TEST_CASE("render and re-parse round trip") {
    ChowRingPtr F = fano_ring();
    SeededRng rng(9);
    for (int round = 0; round < 10; ++round) {
        ChowClass c = F->zero();
        for (int t = 0; t < 5; ++t) {
            std::vector<Exp> e(F->q(), 0);
            for (int k = 0; k < F->q(); ++k) e[k] = static_cast<Exp>(rng.below(3));
            c = c + F->monomial_class(e, static_cast<long long>(rng.below(21)) - 10);
        }
        CHECK(F->parse_class(F->render(c)) == c);
    }
}
