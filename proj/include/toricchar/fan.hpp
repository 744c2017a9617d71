#ifndef TORICCHAR_FAN_HPP
#define TORICCHAR_FAN_HPP

#include <string>
#include <vector>

#include "toricchar/groebner.hpp"
#include "toricchar/ideal.hpp"

namespace toricchar {

/**
 * @brief A complete simplicial fan given by primitive ray generators and
 * maximal cones (ray-index sets). This is the combinatorial source for the
 * toric variety: its Cox ring, Chow ring, and all divisor-class data.
 */
struct Fan {
    int dim = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> max_cones;    // sorted index sets
    std::vector<std::string> var_names;         // one per ray; defaults x0..x{m-1}
    std::vector<int> factor_dims;               // nonempty iff built from a product shorthand

    int nrays() const { return static_cast<int>(rays.size()); }

    static Fan product_of_projective_spaces(const std::vector<int>& dims);
    /// "P4xP2", "P^4xP^2", "P1xP1xP1", ... (case-insensitive)
    static Fan from_shorthand(const std::string& text);
    static Fan from_json_text(const std::string& json_text);
    static Fan from_json_file(const std::string& path);
    std::string to_json_text() const;
};

struct FanValidation {
    bool smooth = false;
    bool complete = false;
    bool simplicial = false;
    std::vector<std::string> notes;
    bool ok() const { return smooth && complete && simplicial; }
};

/// throws FanValidationError on non-primitive or duplicate rays
FanValidation validate(const Fan& fan);
void require_valid(const Fan& fan); // throws unless smooth and complete

/// minimal non-faces of the cone complex, each sorted, canonically ordered
std::vector<std::vector<int>> primitive_collections(const Fan& fan);

/// number of primitive collections == m - n
bool affine_codim_condition(const Fan& fan);

/// one square-free exponent vector per primitive collection
std::vector<std::vector<Exp>> stanley_reisner_monomials(const Fan& fan);

struct ClassGroupGrading {
    int q = 0;
    std::vector<DegVec> degrees;               // per variable, in the chosen basis
    std::vector<std::vector<long long>> relations; // n rows; row l = <e_l, v_j> coefficients
    std::vector<int> basis_vars;               // variables outside cone 0; deg = identity
};

/// basis convention: the q variables outside the first maximal cone get the
/// identity grading; the rest are solved from the ray relations
ClassGroupGrading class_group_grading(const Fan& fan);

bool is_nef(const DegVec& cls, const Fan& fan);

/// q nef classes forming a Z-basis of Pic, deterministic for a given fan
std::vector<DegVec> nef_basis(const Fan& fan);

/// monomial generators, one per maximal cone (product of excluded variables)
std::vector<std::vector<Exp>> irrelevant_monomials(const Fan& fan);

/// Cox ring of the fan over the given field
RingPtr cox_ring(const Fan& fan, const PrimeField& field);

Ideal irrelevant_ideal(const Fan& fan, const RingPtr& ring);

/// one affine-linear generator per primitive collection, random nonzero
/// scalars; requires the affine codimension condition
Ideal dehomogenizing_ideal(const Fan& fan, const RingPtr& ring, SeededRng& rng);

} // namespace toricchar

#endif
