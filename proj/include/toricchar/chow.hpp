#ifndef TORICCHAR_CHOW_HPP
#define TORICCHAR_CHOW_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "toricchar/fan.hpp"

namespace toricchar {

class ChowRing;
using ChowRingPtr = std::shared_ptr<const ChowRing>;

/**
 * @brief Element of A*(X) in normal form over the integers.
 *
 * Internally a class is an integer polynomial in the q free divisor classes
 * (the variables outside the reference maximal cone), reduced modulo the
 * Stanley-Reisner relations. Mixed-codimension elements are allowed.
 */
class ChowClass {
public:
    ChowClass() = default;

    const ChowRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    ChowClass operator-() const;
    ChowClass operator*(const ChowClass& o) const;
    ChowClass scaled(long long c) const;
    ChowClass pow(unsigned e) const;
    bool operator==(const ChowClass& o) const;
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

    ChowClass graded_part(int codim) const;
    long long constant_term() const;

    /// coefficient of the exponent vector (in the free divisor classes)
    long long coeff_of(const std::vector<Exp>& e) const;

    std::string render() const;

    struct Term {
        std::vector<Exp> e;
        long long c;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    friend class ChowRing;
    ChowRingPtr ring_;
    std::vector<Term> terms_; // normal form, sorted descending degrevlex
};

/**
 * @brief A*(X_Sigma) = Z[x_1..x_m]/(Stanley-Reisner + linear relations),
 * realized in the q = m - n free classes with a fixed rewriting system.
 *
 * Normal forms are computed against a rational Gröbner basis of the reduced
 * presentation; reductions of integer inputs are asserted integral. Also
 * carries the nef basis, the point class zeta as a nef-basis monomial, and
 * per-codimension monomial bases Omega used for projective degrees.
 */
class ChowRing : public std::enable_shared_from_this<ChowRing> {
public:
    static ChowRingPtr build(const Fan& fan, RingPtr cox);

    int dim() const { return n_; }
    int q() const { return q_; }
    int ncones() const { return ncones_; }
    int rank(int codim) const;
    const std::vector<int>& ranks() const { return ranks_; }
    const RingPtr& cox() const { return cox_; }
    const Fan& fan() const { return fan_; }
    const std::vector<std::string>& names() const { return names_; } // q display names

    ChowClass zero() const;
    ChowClass one() const;
    ChowClass from_int(long long c) const;
    /// class of the divisor V(x_i) for a Cox variable
    ChowClass var_class(int var) const;
    /// codim-1 class from a Pic vector (coordinates in the identity basis)
    ChowClass class_from_pic(const DegVec& d) const;
    /// monomial in the free classes
    ChowClass monomial_class(const std::vector<Exp>& e, long long c = 1) const;
    /// monomial in the nef basis: prod b_k^{e_k}
    ChowClass nef_monomial(const std::vector<Exp>& e) const;

    const std::vector<DegVec>& nef_vectors() const { return nef_; }
    ChowClass nef_class(int k) const;

    ChowClass point_class() const;
    const std::vector<Exp>& point_exponents() const { return zeta_; } // in the nef basis
    long long degree(const ChowClass& c) const;

    ChowClass chern_tangent() const;
    ChowClass invert_unit(const ChowClass& u) const;

    /// monomial basis of A^iota in the nef basis (exponent vectors <= zeta)
    const std::vector<std::vector<Exp>>& omega(int iota) const;
    ChowClass omega_class(int iota, int i) const;
    /// exponents of the complementary cycle zeta / omega_i
    std::vector<Exp> complementary_exponents(int iota, int i) const;
    ChowClass complementary_class(int iota, int i) const;
    /// complementary ideal: for a = prod b_k^{j_k}, j_k random forms of
    /// degree b_k each
    Ideal complementary_ideal(int iota, int i, SeededRng& rng) const;

    /// true when omega_j * (zeta/omega_i) = delta_ij * zeta holds at iota
    bool orthogonal(int iota) const;
    bool orthogonal_everywhere() const;
    /// intersection pairing deg(omega_j * a_i); identity iff orthogonal
    const std::vector<std::vector<long long>>& gram(int iota) const;
    /// solve the pairing for the coefficients of [Y_iota] from the measured
    /// point counts; exact, integral, reduces to counts when orthogonal
    std::vector<long long> extract_gammas(int iota, const std::vector<long long>& counts) const;

    /// expression over the h-names and/or Cox variable names
    ChowClass parse_class(const std::string& text) const;

    std::string render(const ChowClass& c) const;

private:
    ChowRing() = default;
    struct QPolyGB;
    ChowClass reduce_terms(std::vector<ChowClass::Term> raw) const;
    ChowClass make(std::vector<ChowClass::Term> nf) const;
    friend class ChowClass;

    Fan fan_;
    RingPtr cox_;
    int n_ = 0, q_ = 0, ncones_ = 0;
    std::vector<int> ranks_;
    std::vector<std::string> names_;              // display names of the free classes
    std::vector<std::vector<ChowClass::Term>> subst_; // per Cox var: linear form in free classes
    std::shared_ptr<QPolyGB> gb_;                 // rational rewriting system
    std::vector<std::vector<std::vector<Exp>>> std_monomials_; // per codim
    std::vector<Exp> point_monomial_;             // the unique codim-n standard monomial
    int point_sign_ = 1;                          // degree(point_monomial) = point_sign
    std::vector<DegVec> nef_;
    std::vector<Exp> zeta_;                       // point class exponents in nef basis
    std::vector<std::vector<std::vector<Exp>>> omega_;      // per codim
    std::vector<std::vector<std::vector<long long>>> gram_; // per codim
    std::vector<char> orthogonal_;
};

/// convenience wrapper matching the operation map
inline ChowRingPtr build_chow_ring(const Fan& fan, RingPtr cox) {
    return ChowRing::build(fan, std::move(cox));
}

} // namespace toricchar

#endif
