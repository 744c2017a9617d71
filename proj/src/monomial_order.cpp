#include "toricchar/monomial_order.hpp"

namespace toricchar {

namespace {

int cmp_drl(const Exp* a, const Exp* b, int lo, int hi) {
    long long da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

} // namespace

int MonomialOrder::cmp(const Exp* a, const Exp* b, int n) const {
    switch (kind) {
    case Kind::Degrevlex:
        return cmp_drl(a, b, 0, n);
    case Kind::Lex:
        for (int i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    case Kind::Block: {
        int c = cmp_drl(a, b, 0, block);
        if (c != 0) return c;
        return cmp_drl(a, b, block, n);
    }
    }
    return 0;
}

} // namespace toricchar
