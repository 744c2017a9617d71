#ifndef TORICCHAR_GRADED_RING_HPP
#define TORICCHAR_GRADED_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toricchar/errors.hpp"
#include "toricchar/prime_field.hpp"

namespace toricchar {

using Exp = std::uint16_t;
using DegVec = std::vector<long long>;

/**
 * @brief The Cox (total coordinate) ring: named variables over GF(p), each
 * graded variable carrying a multidegree in Pic = Z^q.
 *
 * Auxiliary variables (the Rabinowitsch T, saturation helpers) carry a zero
 * degree column and are excluded from degree-driven monomial enumeration.
 * Rings are immutable and shared by shared_ptr.
 */
class GradedRing {
public:
    static std::shared_ptr<const GradedRing>
    make(std::vector<std::string> names, std::vector<DegVec> degrees, PrimeField field);

    int nvars() const { return static_cast<int>(names_.size()); }
    int pic_rank() const { return q_; }
    const PrimeField& field() const { return field_; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    bool is_aux(int i) const { return aux_[i] != 0; }
    const DegVec& degree_of_var(int i) const { return degrees_[i]; }

    int var_index(const std::string& name) const; // -1 if absent

    /// Pic-degree of an exponent vector (aux variables contribute nothing;
    /// a nonzero aux exponent makes the monomial ungradable and throws).
    DegVec degree_of_exponents(const Exp* e) const;

    /// All exponent vectors of graded monomials with Pic-degree beta, in a
    /// fixed deterministic order. Aux slots are zero.
    std::vector<std::vector<Exp>> monomials_of_degree(const DegVec& beta) const;

    /// ring with one extra ungraded variable appended / prepended
    std::shared_ptr<const GradedRing> with_suffix_var(const std::string& name) const;
    std::shared_ptr<const GradedRing> with_prefix_var(const std::string& name) const;

    bool same_ring(const GradedRing& o) const { return this == &o; }

private:
    GradedRing() : field_(PrimeField::kDefaultPrime) {}
    void compute_positive_functional();

    std::vector<std::string> names_;
    std::vector<DegVec> degrees_;     // one column per variable (zero for aux)
    std::vector<char> aux_;
    int q_ = 0;
    PrimeField field_;
    DegVec posfun_;                   // y with <y, deg(x_i)> >= 1 for graded i
};

using RingPtr = std::shared_ptr<const GradedRing>;

} // namespace toricchar

#endif
