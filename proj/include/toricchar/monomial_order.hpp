#ifndef TORICCHAR_MONOMIAL_ORDER_HPP
#define TORICCHAR_MONOMIAL_ORDER_HPP

#include "toricchar/graded_ring.hpp"

namespace toricchar {

/**
 * @brief Term orders understood by the Gröbner engine.
 *
 * Block is the elimination order for the first `block` variables: compare
 * degrevlex on the leading block, ties resolved degrevlex on the rest. Any
 * monomial containing an eliminated variable exceeds every monomial without
 * one, so basis elements free of the block generate the elimination ideal.
 */
struct MonomialOrder {
    enum class Kind { Degrevlex, Lex, Block };

    Kind kind = Kind::Degrevlex;
    int block = 0; // leading variables to eliminate (Kind::Block)

    static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block_elim(int k) { return {Kind::Block, k}; }

    /// <0, 0, >0 like memcmp; n = number of variables
    int cmp(const Exp* a, const Exp* b, int n) const;

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && block == o.block;
    }
};

} // namespace toricchar

#endif
