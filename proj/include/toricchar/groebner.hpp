#ifndef TORICCHAR_GROEBNER_HPP
#define TORICCHAR_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "toricchar/ideal.hpp"
#include "toricchar/monomial_order.hpp"

namespace toricchar {

/// reduced Gröbner basis: monic elements, no leading term divides another,
/// every S-polynomial reduces to zero
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elements; // each sorted for `order` internally
};

GroebnerBasis groebner_basis(const Ideal& ideal,
                             MonomialOrder order = MonomialOrder::degrevlex());

/// remainder of multivariate division by G; zero iff f lies in the ideal
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

inline constexpr std::uint64_t kInfiniteDim = ~std::uint64_t{0};

/// number of standard monomials (monomials outside the leading-term ideal);
/// kInfiniteDim when the staircase is unbounded
std::uint64_t quotient_dim(const GroebnerBasis& G);

/// Krull dimension of the quotient by the leading-term ideal (equals the
/// ideal's dimension); -1 for the unit ideal
int staircase_dim(const GroebnerBasis& G);

bool ideal_membership(const Polynomial& f, const Ideal& I);

/// I : f^infinity via a fresh Rabinowitsch variable and block elimination
Ideal saturate(const Ideal& I, const Polynomial& f);

/// A ∩ B via the graded trick t*A + (1-t)*B and elimination of t
Ideal ideal_intersect(const Ideal& A, const Ideal& B);

/// I : B^infinity = ∩_j (I : g_j^infinity), iterated until stable
Ideal saturate_by_ideal(const Ideal& I, const Ideal& B);

/// reduced bases are unique per order, so this is a decision procedure
bool ideal_equal(const Ideal& A, const Ideal& B);

bool contains_one(const Ideal& I);

} // namespace toricchar

#endif
