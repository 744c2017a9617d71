#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "toricchar/fan.hpp"

using namespace toricchar;

namespace {

Fan fano() { return Fan::from_json_file(DATA_DIR "/fano4_7.json"); }

// blow-up of P^2 at two torus-fixed points: m - n = 3 but five primitive
// collections, so the affine codimension condition fails
Fan blp2_two_points() {
    Fan f;
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {-1, 0}};
    f.max_cones = {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 2}};
    f.var_names = {"x0", "x1", "x2", "x3", "x4"};
    return f;
}

// monomial-ideal equality for square-free exponent sets
bool monomial_ideal_equal(const std::vector<std::vector<Exp>>& A,
                          const std::vector<std::vector<Exp>>& B) {
    auto divides_some = [](const std::vector<Exp>& m, const std::vector<std::vector<Exp>>& gens) {
        for (const auto& g : gens) {
            bool div = true;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (g[i] > m[i]) { div = false; break; }
            if (div) return true;
        }
        return false;
    };
    for (const auto& a : A)
        if (!divides_some(a, B)) return false;
    for (const auto& b : B)
        if (!divides_some(b, A)) return false;
    return true;
}

} // namespace

TEST_CASE("validation: projective spaces and products") {
    FanValidation v = validate(Fan::from_shorthand("P2"));
    CHECK(v.smooth);
    CHECK(v.complete);
    CHECK(v.simplicial);

    FanValidation w = validate(Fan::from_shorthand("P4xP2"));
    CHECK(w.ok());
    CHECK(Fan::from_shorthand("P4xP2").max_cones.size() == 15);
}

TEST_CASE("validation: the smooth Fano fourfold") {
    FanValidation v = validate(fano());
    CHECK(v.smooth);
    CHECK(v.complete);
}

TEST_CASE("validation: P2 with a deleted cone is not complete") {
    Fan f = Fan::from_shorthand("P2");
    f.max_cones.pop_back();
    FanValidation v = validate(f);
    CHECK(v.smooth);
    CHECK_FALSE(v.complete);
}

TEST_CASE("validation: bad rays throw") {
    Fan f = Fan::from_shorthand("P2");
    f.rays[0] = {2, 0};
    CHECK_THROWS_AS(validate(f), FanValidationError);
    Fan g = Fan::from_shorthand("P2");
    g.rays[1] = g.rays[0];
    CHECK_THROWS_AS(validate(g), FanValidationError);
}

TEST_CASE("primitive collections") {
    auto pc_pn = primitive_collections(Fan::from_shorthand("P3"));
    REQUIRE(pc_pn.size() == 1);
    CHECK(pc_pn[0] == std::vector<int>{0, 1, 2, 3});

    auto pc_prod = primitive_collections(Fan::from_shorthand("P2xP4"));
    CHECK(pc_prod.size() == 2);

    auto pc_fano = primitive_collections(fano());
    REQUIRE(pc_fano.size() == 2);
    CHECK(pc_fano[0] == std::vector<int>{0, 1, 2});
    CHECK(pc_fano[1] == std::vector<int>{3, 4, 5});
}

TEST_CASE("affine codimension condition") {
    CHECK(affine_codim_condition(Fan::from_shorthand("P4xP2")));
    CHECK(affine_codim_condition(fano()));
    Fan bl = blp2_two_points();
    CHECK(validate(bl).ok());
    CHECK(primitive_collections(bl).size() == 5);
    CHECK_FALSE(affine_codim_condition(bl));
}

TEST_CASE("Stanley-Reisner monomials") {
    auto sr_p2 = stanley_reisner_monomials(Fan::from_shorthand("P2"));
    REQUIRE(sr_p2.size() == 1);
    CHECK(sr_p2[0] == std::vector<Exp>{1, 1, 1});

    auto sr = stanley_reisner_monomials(Fan::from_shorthand("P1xP1"));
    REQUIRE(sr.size() == 2);
    CHECK(sr[0] == std::vector<Exp>{1, 1, 0, 0});
    CHECK(sr[1] == std::vector<Exp>{0, 0, 1, 1});

    auto srf = stanley_reisner_monomials(fano());
    REQUIRE(srf.size() == 2);
    CHECK(srf[0] == std::vector<Exp>{1, 1, 1, 0, 0, 0});
    CHECK(srf[1] == std::vector<Exp>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("class group grading") {
    ClassGroupGrading g = class_group_grading(Fan::from_shorthand("P4xP2"));
    CHECK(g.q == 2);
    for (int i = 0; i <= 4; ++i) CHECK(g.degrees[i] == DegVec{1, 0});
    for (int i = 5; i <= 7; ++i) CHECK(g.degrees[i] == DegVec{0, 1});

    ClassGroupGrading f = class_group_grading(fano());
    CHECK(f.degrees[0] == DegVec{1, -1});
    CHECK(f.degrees[1] == DegVec{1, 0});
    CHECK(f.degrees[2] == DegVec{1, 0});
    CHECK(f.degrees[3] == DegVec{0, 1});
    CHECK(f.degrees[4] == DegVec{0, 1});
    CHECK(f.degrees[5] == DegVec{0, 1});

    ClassGroupGrading p1 = class_group_grading(Fan::from_shorthand("P1"));
    CHECK(p1.degrees[0] == DegVec{1});
    CHECK(p1.degrees[1] == DegVec{1});
}

TEST_CASE("grading satisfies the ray relations and spans") {
    for (const char* space : {"P2", "P1xP1xP1", "P3xP2"}) {
        Fan fan = Fan::from_shorthand(space);
        ClassGroupGrading g = class_group_grading(fan);
        for (int l = 0; l < fan.dim; ++l)
            for (int k = 0; k < g.q; ++k) {
                long long s = 0;
                for (int j = 0; j < fan.nrays(); ++j)
                    s += fan.rays[j][l] * g.degrees[j][k];
                CHECK(s == 0);
            }
        // identity block on the variables outside the first cone
        for (int k = 0; k < g.q; ++k) {
            DegVec unit(g.q, 0);
            unit[k] = 1;
            CHECK(g.degrees[g.basis_vars[k]] == unit);
        }
    }
}

TEST_CASE("nef tests") {
    Fan p3 = Fan::from_shorthand("P3");
    CHECK(is_nef({1}, p3));
    CHECK_FALSE(is_nef({-1}, p3));

    Fan f = fano();
    CHECK(is_nef({1, 0}, f));  // [V(rho2)]
    CHECK(is_nef({0, 1}, f));  // [V(rho5)]
    CHECK_FALSE(is_nef({1, -1}, f)); // [V(rho0)]
}

TEST_CASE("nef basis") {
    auto b = nef_basis(Fan::from_shorthand("P4xP2"));
    REQUIRE(b.size() == 2);
    CHECK(b[0] == DegVec{1, 0});
    CHECK(b[1] == DegVec{0, 1});

    auto bf = nef_basis(fano());
    REQUIRE(bf.size() == 2);
    CHECK(bf[0] == DegVec{1, 0});
    CHECK(bf[1] == DegVec{0, 1});

    auto b1 = nef_basis(Fan::from_shorthand("P1"));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == DegVec{1});

    // products: exactly the factor hyperplane classes
    auto b3 = nef_basis(Fan::from_shorthand("P1xP2xP1"));
    REQUIRE(b3.size() == 3);
    CHECK(b3[0] == DegVec{1, 0, 0});
    CHECK(b3[1] == DegVec{0, 1, 0});
    CHECK(b3[2] == DegVec{0, 0, 1});
}

TEST_CASE("irrelevant ideal equals the intersection over primitive collections") {
    for (const Fan& fan : {Fan::from_shorthand("P2"), Fan::from_shorthand("P1xP1"), fano()}) {
        auto gens = irrelevant_monomials(fan);
        // intersection of the variable primes = all products choosing one
        // variable per collection
        auto pcs = primitive_collections(fan);
        std::vector<std::vector<Exp>> expect;
        std::vector<std::size_t> pick(pcs.size(), 0);
        while (true) {
            std::vector<Exp> e(fan.nrays(), 0);
            for (std::size_t l = 0; l < pcs.size(); ++l) e[pcs[l][pick[l]]] = 1;
            expect.push_back(e);
            std::size_t k = 0;
            while (k < pcs.size() && pick[k] + 1 == pcs[k].size()) pick[k++] = 0;
            if (k == pcs.size()) break;
            ++pick[k];
        }
        CHECK(monomial_ideal_equal(gens, expect));
    }
}

TEST_CASE("irrelevant ideal of P2 and P1xP1") {
    // each maximal cone of P^2 misses one ray, so B = (x0, x1, x2); the
    // presentation with pair products generates the same monomial ideal
    Fan p2 = Fan::from_shorthand("P2");
    auto gens = irrelevant_monomials(p2);
    REQUIRE(gens.size() == 3);
    std::set<std::vector<Exp>> got(gens.begin(), gens.end());
    CHECK(got.count({1, 0, 0}) == 1);
    CHECK(got.count({0, 1, 0}) == 1);
    CHECK(got.count({0, 0, 1}) == 1);

    CHECK(irrelevant_monomials(Fan::from_shorthand("P1xP1")).size() == 4);
    CHECK(irrelevant_monomials(fano()).size() == 9);
}

TEST_CASE("dehomogenizing ideal") {
    SeededRng rng(4);
    Fan p3 = Fan::from_shorthand("P3");
    RingPtr R3 = cox_ring(p3, PrimeField());
    Ideal L = dehomogenizing_ideal(p3, R3, rng);
    REQUIRE(L.generators.size() == 1);
    CHECK(L.generators[0].nterms() == 5); // 4 variables and the constant
    CHECK(L.generators[0].max_total_degree() == 1);

    Fan f = fano();
    RingPtr Rf = cox_ring(f, PrimeField());
    Ideal Lf = dehomogenizing_ideal(f, Rf, rng);
    REQUIRE(Lf.generators.size() == 2); // m - n = 2 generators
    for (const auto& g : Lf.generators) CHECK(g.nterms() == 4);

    Fan pq = Fan::from_shorthand("P2xP3");
    RingPtr Rpq = cox_ring(pq, PrimeField());
    CHECK(dehomogenizing_ideal(pq, Rpq, rng).generators.size() == 2);

    RingPtr Rbl = cox_ring(blp2_two_points(), PrimeField());
    CHECK_THROWS_AS(dehomogenizing_ideal(blp2_two_points(), Rbl, rng), ConditionFailedError);
}

TEST_CASE("smoothness determinant property across the corpus") {
    for (const Fan& fan : {Fan::from_shorthand("P5"), Fan::from_shorthand("P2xP2xP2"), fano()}) {
        FanValidation v = validate(fan);
        CHECK(v.smooth);
        CHECK(v.complete);
    }
}

TEST_CASE("fan JSON round trip") {
    Fan f = fano();
    Fan g = Fan::from_json_text(f.to_json_text());
    CHECK(f.rays == g.rays);
    CHECK(f.max_cones == g.max_cones);
    CHECK(f.var_names == g.var_names);
}

TEST_CASE("shorthand parsing") {
    CHECK(Fan::from_shorthand("P^4xP^2").nrays() == 8);
    CHECK(Fan::from_shorthand("p1Xp1").nrays() == 4);
    CHECK_THROWS_AS(Fan::from_shorthand("Q2"), ParseError);
    CHECK_THROWS_AS(Fan::from_shorthand("P"), ParseError);
}
