#ifndef TORICCHAR_POLYNOMIAL_HPP
#define TORICCHAR_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricchar/graded_ring.hpp"
#include "toricchar/rng.hpp"

namespace toricchar {

/// degrevlex on full exponent vectors; the library's canonical storage order
int cmp_degrevlex(const Exp* a, const Exp* b, int n);

/**
 * @brief Sparse multivariate polynomial over GF(p).
 *
 * Terms are stored struct-of-arrays (flat exponent buffer + coefficient
 * vector), strictly descending in degrevlex, with no zero coefficients.
 * Polynomials are immutable values; all operators return fresh objects.
 */
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, long long c);
    static Polynomial variable(RingPtr ring, int var);
    static Polynomial monomial(RingPtr ring, const std::vector<Exp>& exps, long long c);

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_->nvars(); }
    int nterms() const { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const { return coeffs_.empty(); }

    const Exp* exps(int t) const { return exps_.data() + static_cast<std::size_t>(t) * nvars(); }
    std::uint32_t coeff(int t) const { return coeffs_[t]; }
    std::uint32_t total_degree(int t) const { return tdeg_[t]; }
    std::uint32_t max_total_degree() const; // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(std::uint32_t c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const;

    /// substitute x_var := g (g in the same ring); used to eliminate
    /// affine-linear equations before dimension counts
    Polynomial substitute(int var, const Polynomial& g) const;

    /// re-interpret in another ring; old variable i becomes new variable
    /// var_map[i] (exponents move, coefficients unchanged)
    Polynomial mapped(RingPtr target, const std::vector<int>& var_map) const;

    bool is_homogeneous() const;
    /// common Pic-degree of all terms; throws ZeroPolynomialError /
    /// NotHomogeneousError
    DegVec multidegree() const;

    std::string render() const;

    /// raw term push for builders; terms may arrive unordered and
    /// with duplicates, finalize() canonicalizes
    void push_term(const std::vector<Exp>& e, std::uint32_t c);
    void finalize();

private:
    friend class PolyBuilder;
    RingPtr ring_;
    std::vector<Exp> exps_;
    std::vector<std::uint32_t> coeffs_;
    std::vector<std::uint32_t> tdeg_;
};

/// parse the textual grammar: integer coefficients, declared variable names,
/// `+ - * ^` and parentheses; the ASCII hyphen and U+2212 both act as minus
Polynomial parse_polynomial(const std::string& text, RingPtr ring);

/// sum over all monomials of degree beta with independent uniform nonzero
/// coefficients; deterministic given the rng state
Polynomial random_form(const DegVec& beta, RingPtr ring, SeededRng& rng);

} // namespace toricchar

#endif
