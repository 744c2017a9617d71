#ifndef TORICCHAR_IDEAL_HPP
#define TORICCHAR_IDEAL_HPP

#include <vector>

#include "toricchar/polynomial.hpp"

namespace toricchar {

/// finitely generated ideal; generators share one ring
struct Ideal {
    explicit Ideal(RingPtr ring) : ring(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring(std::move(ring)), generators(std::move(gens)) {}

    RingPtr ring;
    std::vector<Polynomial> generators;

    Ideal& add(Polynomial f) {
        generators.push_back(std::move(f));
        return *this;
    }
};

} // namespace toricchar

#endif
