#ifndef TORICCHAR_CHARCLASS_HPP
#define TORICCHAR_CHARCLASS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "toricchar/chow.hpp"

namespace toricchar {

/// shared context for class computations on one toric variety
struct ToricContext {
    Fan fan;
    RingPtr ring;
    ChowRingPtr chow;
    int workers = 1;

    static ToricContext create(const Fan& fan, const PrimeField& field, int workers = 1);
};

/**
 * @brief Subscheme V(I) of X. Keeps both the generators as given (used by
 * inclusion/exclusion and the Jacobian paths) and the degree-normalized
 * generators of common nef multidegree alpha (used by the projective-degree
 * machinery).
 */
struct Subscheme {
    const ToricContext* ctx = nullptr;
    std::vector<Polynomial> raw;       // input generators, nonzero, homogeneous
    std::vector<Polynomial> prepared;  // all of multidegree alpha
    DegVec alpha;

    bool empty_ideal() const { return raw.empty(); }
};

/// normalize generators to a common nef multidegree; multiplies each f_i by
/// every monomial of the complementary degree, which preserves the
/// B-saturation because the complementary degrees are chosen nef
Subscheme prepare_generators(const ToricContext& ctx, std::vector<Polynomial> gens);

/// classes [Y_iota] of the rational map attached to the ideal, with the raw
/// point counts per basis cycle
struct DegreeTable {
    std::vector<ChowClass> Y;                                  // 0..n
    std::vector<std::vector<long long>> gammas;                // per iota, per omega index
    std::vector<std::vector<long long>> counts;                // measured quotient dimensions
    int codim = 0;
    ChowClass G() const;
};

DegreeTable projective_degrees(const Subscheme& V, SeededRng& rng);

ChowClass segre_class(const Subscheme& V, SeededRng& rng);
ChowClass chern_fulton(const Subscheme& V, SeededRng& rng);

/// hypersurface: the partial-derivative ideal (f itself is redundant by the
/// Euler relations); complete intersection: (I + minors) : B^infinity
Ideal singularity_subscheme(const Subscheme& V);

ChowClass csm_hypersurface(const ToricContext& ctx, const Polynomial& f, SeededRng& rng);

/// inclusion/exclusion over nonempty generator subsets
ChowClass csm(const Subscheme& V, SeededRng& rng,
              unsigned subset_cap = 1u << 10,
              const std::function<void(const std::string&)>& warn = {});

/// direct formula for a global complete intersection whose first r
/// hypersurfaces cut a smooth subvariety; set verify_front to check that
/// assumption via the singularity subscheme
ChowClass csm_complete_intersection(const Subscheme& V, SeededRng& rng,
                                    bool verify_front = false);

/// c_SM(Z ∩ V(f1) ∩ V(f2)) for smooth complete-intersection Z via the
/// specialized inclusion/exclusion on the two singular hypersurfaces
ChowClass csm_smooth_times_singular(const ToricContext& ctx,
                                    const std::vector<Polynomial>& Z,
                                    const Polynomial& f1, const Polynomial& f2,
                                    SeededRng& rng);

long long euler(const Subscheme& V, SeededRng& rng);

/// affine dimension of V(I + L_A), i.e. the dimension of the subscheme
int subscheme_dim(const ToricContext& ctx, const std::vector<Polynomial>& gens,
                  SeededRng& rng);

} // namespace toricchar

#endif
