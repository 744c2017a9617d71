#include "toricchar/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

namespace toricchar {

namespace {

// ---------------------------------------------------------------------------
// engine representation: flat terms sorted descending under the active order

struct EPoly {
    std::vector<Exp> ex;
    std::vector<std::uint32_t> cf;
    int nt = 0;

    bool empty() const { return nt == 0; }
    void clear() {
        ex.clear();
        cf.clear();
        nt = 0;
    }
};

struct Engine {
    int n;
    MonomialOrder ord;
    PrimeField F;

    Engine(int nvars, MonomialOrder o, PrimeField f) : n(nvars), ord(o), F(f) {}

    int cmp(const Exp* a, const Exp* b) const { return ord.cmp(a, b, n); }

    static bool divides(const Exp* d, const Exp* m, int n) {
        for (int i = 0; i < n; ++i)
            if (d[i] > m[i]) return false;
        return true;
    }

    EPoly from_poly(const Polynomial& p) const {
        EPoly e;
        e.nt = p.nterms();
        e.ex.resize(static_cast<std::size_t>(e.nt) * n);
        e.cf.resize(e.nt);
        std::vector<int> idx(e.nt);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return cmp(p.exps(a), p.exps(b)) > 0; });
        for (int t = 0; t < e.nt; ++t) {
            std::copy(p.exps(idx[t]), p.exps(idx[t]) + n, e.ex.begin() + static_cast<std::size_t>(t) * n);
            e.cf[t] = p.coeff(idx[t]);
        }
        return e;
    }

    Polynomial to_poly(const EPoly& e, const RingPtr& ring) const {
        Polynomial p(ring);
        std::vector<Exp> tmp(n);
        for (int t = 0; t < e.nt; ++t) {
            std::copy(e.ex.begin() + static_cast<std::size_t>(t) * n,
                      e.ex.begin() + static_cast<std::size_t>(t + 1) * n, tmp.begin());
            p.push_term(tmp, e.cf[t]);
        }
        p.finalize();
        return p;
    }

    void make_monic(EPoly& e) const {
        if (e.empty() || e.cf[0] == 1) return;
        std::uint32_t iv = F.inv(e.cf[0]);
        for (auto& c : e.cf) c = F.mul(c, iv);
    }
};

// geobucket accumulator: buckets of geometrically growing capacity keep each
// subtraction near the size of the reducer rather than the full remainder
class Geobucket {
public:
    Geobucket(const Engine& eng) : eng_(eng) {}

    bool empty_hint() const {
        for (const auto& b : buckets_)
            if (b.start < b.p.nt) return false;
        return true;
    }

    // add c * mono * g, skipping the first `skip` terms of g
    void add_scaled(const EPoly& g, const Exp* mono, std::uint32_t c, int skip = 0) {
        const int n = eng_.n;
        int cnt = g.nt - skip;
        if (cnt <= 0 || c == 0) return;
        EPoly t;
        t.nt = cnt;
        t.ex.resize(static_cast<std::size_t>(cnt) * n);
        t.cf.resize(cnt);
        for (int i = 0; i < cnt; ++i) {
            const Exp* src = g.ex.data() + static_cast<std::size_t>(i + skip) * n;
            Exp* dst = t.ex.data() + static_cast<std::size_t>(i) * n;
            for (int k = 0; k < n; ++k) dst[k] = static_cast<Exp>(src[k] + mono[k]);
            t.cf[i] = eng_.F.mul(g.cf[i + skip], c);
        }
        insert(std::move(t));
    }

    void add(EPoly t) { insert(std::move(t)); }

    // exposes the true leading term after cross-bucket cancellation;
    // false when the accumulated value is zero
    bool peek_lead(const Exp*& mono, std::uint32_t& coeff) {
        const int n = eng_.n;
        while (true) {
            int best = -1;
            lead_members_.clear();
            for (std::size_t b = 0; b < buckets_.size(); ++b) {
                auto& bk = buckets_[b];
                if (bk.start >= bk.p.nt) continue;
                const Exp* h = bk.p.ex.data() + static_cast<std::size_t>(bk.start) * n;
                if (best < 0) {
                    best = static_cast<int>(b);
                    lead_members_.assign(1, static_cast<int>(b));
                } else {
                    auto& bb = buckets_[best];
                    const Exp* hb = bb.p.ex.data() + static_cast<std::size_t>(bb.start) * n;
                    int c = eng_.cmp(h, hb);
                    if (c > 0) {
                        best = static_cast<int>(b);
                        lead_members_.assign(1, static_cast<int>(b));
                    } else if (c == 0) {
                        lead_members_.push_back(static_cast<int>(b));
                    }
                }
            }
            if (best < 0) return false;
            std::uint32_t s = 0;
            for (int b : lead_members_) {
                auto& bk = buckets_[b];
                s = eng_.F.add(s, bk.p.cf[bk.start]);
            }
            if (s != 0) {
                auto& bb = buckets_[best];
                mono = bb.p.ex.data() + static_cast<std::size_t>(bb.start) * n;
                coeff = s;
                return true;
            }
            for (int b : lead_members_) ++buckets_[b].start;
        }
    }

    // drop the term last returned by peek_lead
    void pop_lead() {
        for (int b : lead_members_) ++buckets_[b].start;
    }

private:
    struct Bucket {
        EPoly p;
        int start = 0;
    };

    static std::size_t cap(std::size_t level) { return std::size_t{4} << (2 * level); }

    void insert(EPoly t) {
        const int n = eng_.n;
        std::size_t level = 0;
        while (cap(level) < static_cast<std::size_t>(t.nt)) ++level;
        while (true) {
            if (level >= buckets_.size()) buckets_.resize(level + 1);
            Bucket& bk = buckets_[level];
            if (bk.start >= bk.p.nt) {
                bk.p = std::move(t);
                bk.start = 0;
                return;
            }
            // merge and carry upward if the result outgrows this level
            EPoly merged = merge(bk.p, bk.start, t);
            bk.p.clear();
            bk.start = 0;
            if (static_cast<std::size_t>(merged.nt) <= cap(level) || merged.nt == 0) {
                bk.p = std::move(merged);
                return;
            }
            t = std::move(merged);
            ++level;
        }
        (void)n;
    }

    EPoly merge(const EPoly& a, int astart, const EPoly& b) const {
        const int n = eng_.n;
        EPoly r;
        r.ex.reserve((a.nt - astart + b.nt) * static_cast<std::size_t>(n));
        r.cf.reserve(a.nt - astart + b.nt);
        int i = astart, j = 0;
        while (i < a.nt || j < b.nt) {
            int c;
            if (i == a.nt) c = -1;
            else if (j == b.nt) c = 1;
            else c = eng_.cmp(a.ex.data() + static_cast<std::size_t>(i) * n,
                              b.ex.data() + static_cast<std::size_t>(j) * n);
            if (c > 0) {
                r.ex.insert(r.ex.end(), a.ex.begin() + static_cast<std::size_t>(i) * n,
                            a.ex.begin() + static_cast<std::size_t>(i + 1) * n);
                r.cf.push_back(a.cf[i]);
                ++i;
            } else if (c < 0) {
                r.ex.insert(r.ex.end(), b.ex.begin() + static_cast<std::size_t>(j) * n,
                            b.ex.begin() + static_cast<std::size_t>(j + 1) * n);
                r.cf.push_back(b.cf[j]);
                ++j;
            } else {
                std::uint32_t s = eng_.F.add(a.cf[i], b.cf[j]);
                if (s != 0) {
                    r.ex.insert(r.ex.end(), a.ex.begin() + static_cast<std::size_t>(i) * n,
                                a.ex.begin() + static_cast<std::size_t>(i + 1) * n);
                    r.cf.push_back(s);
                }
                ++i;
                ++j;
            }
        }
        r.nt = static_cast<int>(r.cf.size());
        return r;
    }

    const Engine& eng_;
    std::vector<Bucket> buckets_;
    std::vector<int> lead_members_;
};

// ---------------------------------------------------------------------------
// Buchberger with the Gebauer-Moeller pair criteria and normal selection

struct GbRun {
    Engine eng;
    std::vector<EPoly> basis;         // monic
    std::vector<std::uint32_t> lead_td; // total degree of each lead
    std::vector<int> by_degree;       // basis indices sorted by lead_td

    explicit GbRun(Engine e) : eng(std::move(e)) {}

    const Exp* lm(int i) const {
        return basis[i].ex.data();
    }

    std::uint32_t td(const Exp* m) const {
        std::uint32_t s = 0;
        for (int i = 0; i < eng.n; ++i) s += m[i];
        return s;
    }

    int find_reducer(const Exp* m, std::uint32_t mtd) const {
        for (int i : by_degree) {
            if (lead_td[i] > mtd) return -1;
            if (Engine::divides(lm(i), m, eng.n)) return i;
        }
        return -1;
    }

    // full normal form of the geobucket contents against the basis
    EPoly reduce(Geobucket& gb) const {
        EPoly r;
        const int n = eng.n;
        const Exp* m;
        std::uint32_t c;
        std::vector<Exp> quot(n);
        while (gb.peek_lead(m, c)) {
            int red = find_reducer(m, td(m));
            if (red < 0) {
                r.ex.insert(r.ex.end(), m, m + n);
                r.cf.push_back(c);
                ++r.nt;
                gb.pop_lead();
            } else {
                for (int k = 0; k < n; ++k) quot[k] = static_cast<Exp>(m[k] - lm(red)[k]);
                gb.pop_lead();
                // basis is monic: subtract c * quot * tail(reducer)
                gb.add_scaled(basis[red], quot.data(), eng.F.neg(c), 1);
            }
        }
        return r;
    }

    EPoly reduce_poly(EPoly f) const {
        Geobucket gb(eng);
        gb.add(std::move(f));
        return reduce(gb);
    }

    void insert_basis(EPoly h) {
        eng.make_monic(h);
        std::uint32_t t = td(h.ex.data());
        int idx = static_cast<int>(basis.size());
        basis.push_back(std::move(h));
        lead_td.push_back(t);
        auto it = std::upper_bound(by_degree.begin(), by_degree.end(), idx,
                                   [&](int a, int b) { return lead_td[a] < lead_td[b]; });
        by_degree.insert(it, idx);
    }
};

struct Pair {
    int i, j;
    std::vector<Exp> lcm;
    std::uint32_t lcm_td;
};

void run_buchberger(GbRun& run, std::vector<EPoly> input) {
    const int n = run.eng.n;

    auto lcm_of = [&](const Exp* a, const Exp* b) {
        std::vector<Exp> l(n);
        for (int k = 0; k < n; ++k) l[k] = std::max(a[k], b[k]);
        return l;
    };
    auto coprime = [&](const Exp* a, const Exp* b) {
        for (int k = 0; k < n; ++k)
            if (a[k] && b[k]) return false;
        return true;
    };

    std::vector<Pair> pairs;

    auto update = [&](EPoly h) {
        const int t = static_cast<int>(run.basis.size());
        // candidate pairs with the new element
        std::vector<Pair> cand;
        cand.reserve(t);
        for (int i = 0; i < t; ++i) {
            Pair p{i, t, lcm_of(run.lm(i), h.ex.data()), 0};
            p.lcm_td = run.td(p.lcm.data());
            cand.push_back(std::move(p));
        }
        // chain criterion against existing pairs
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& p : pairs) {
            bool drop = false;
            if (Engine::divides(h.ex.data(), p.lcm.data(), n)) {
                auto lih = lcm_of(run.lm(p.i), h.ex.data());
                auto ljh = lcm_of(run.lm(p.j), h.ex.data());
                if (lih != p.lcm && ljh != p.lcm) drop = true;
            }
            if (!drop) kept.push_back(std::move(p));
        }
        pairs = std::move(kept);
        // prune the candidates: keep minimal lcms, one per lcm value
        std::sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
            if (a.lcm_td != b.lcm_td) return a.lcm_td < b.lcm_td;
            int c = run.eng.cmp(a.lcm.data(), b.lcm.data());
            if (c != 0) return c < 0;
            return a.i < b.i;
        });
        std::vector<Pair> minimal;
        for (auto& p : cand) {
            bool dominated = false;
            for (auto& q : minimal) {
                if (q.lcm == p.lcm || Engine::divides(q.lcm.data(), p.lcm.data(), n)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) minimal.push_back(std::move(p));
        }
        // product criterion last
        for (auto& p : minimal)
            if (!coprime(run.lm(p.i), h.ex.data()))
                pairs.push_back(std::move(p));
        run.insert_basis(std::move(h));
    };

    // seed the basis with the reduced nonzero inputs
    std::sort(input.begin(), input.end(), [&](const EPoly& a, const EPoly& b) {
        if (a.empty() || b.empty()) return b.empty() && !a.empty();
        return run.eng.cmp(a.ex.data(), b.ex.data()) < 0;
    });
    for (auto& f : input) {
        if (f.empty()) continue;
        EPoly r = run.reduce_poly(std::move(f));
        if (!r.empty()) update(std::move(r));
    }

    while (!pairs.empty()) {
        // normal selection: smallest lcm in the order
        std::size_t sel = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = run.eng.cmp(pairs[k].lcm.data(), pairs[sel].lcm.data());
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[sel].i ||
                                     (pairs[k].i == pairs[sel].i && pairs[k].j < pairs[sel].j))))
                sel = k;
        }
        Pair p = std::move(pairs[sel]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(sel));

        std::vector<Exp> qa(n), qb(n);
        for (int k = 0; k < n; ++k) {
            qa[k] = static_cast<Exp>(p.lcm[k] - run.lm(p.i)[k]);
            qb[k] = static_cast<Exp>(p.lcm[k] - run.lm(p.j)[k]);
        }
        Geobucket gb(run.eng);
        gb.add_scaled(run.basis[p.i], qa.data(), 1, 0);
        gb.add_scaled(run.basis[p.j], qb.data(), run.eng.F.p() - 1, 0);
        EPoly r = run.reduce(gb);
        if (!r.empty()) update(std::move(r));
    }

    // minimalize + tail-reduce into the reduced basis; leads of distinct
    // elements are never equal here since every insertion was pre-reduced
    std::vector<int> keep;
    for (std::size_t i = 0; i < run.basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < run.basis.size() && !redundant; ++j)
            if (i != j &&
                Engine::divides(run.lm(static_cast<int>(j)), run.lm(static_cast<int>(i)), n))
                redundant = true;
        if (!redundant) keep.push_back(static_cast<int>(i));
    }

    GbRun fin(run.eng);
    // insert minimal elements by ascending lead so tails reduce fully
    std::sort(keep.begin(), keep.end(),
              [&](int a, int b) { return run.eng.cmp(run.lm(a), run.lm(b)) < 0; });
    for (int i : keep) {
        EPoly r = fin.reduce_poly(std::move(run.basis[i]));
        if (!r.empty()) {
            fin.eng.make_monic(r);
            fin.insert_basis(std::move(r));
        }
    }
    run.basis = std::move(fin.basis);
    run.lead_td = std::move(fin.lead_td);
    run.by_degree = std::move(fin.by_degree);
}

Engine make_engine(const RingPtr& ring, MonomialOrder order) {
    return Engine(ring->nvars(), order, ring->field());
}

std::string fresh_var_name(const RingPtr& ring, const std::string& base) {
    std::string name = base;
    int k = 0;
    while (ring->var_index(name) >= 0) name = base + std::to_string(k++);
    return name;
}

} // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order) {
    GbRun run(make_engine(ideal.ring, order));
    std::vector<EPoly> input;
    input.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators)
        if (!g.is_zero()) input.push_back(run.eng.from_poly(g));
    run_buchberger(run, std::move(input));
    GroebnerBasis G;
    G.ring = ideal.ring;
    G.order = order;
    for (const auto& e : run.basis) G.elements.push_back(run.eng.to_poly(e, ideal.ring));
    // canonical element order: ascending leads
    std::sort(G.elements.begin(), G.elements.end(), [&](const Polynomial& a, const Polynomial& b) {
        EPoly ea = run.eng.from_poly(a), eb = run.eng.from_poly(b);
        return run.eng.cmp(ea.ex.data(), eb.ex.data()) < 0;
    });
    return G;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!f.ring()->same_ring(*G.ring)) throw Error("normal_form: ring mismatch");
    GbRun run(make_engine(G.ring, G.order));
    for (const auto& g : G.elements) {
        EPoly e = run.eng.from_poly(g);
        run.eng.make_monic(e);
        run.insert_basis(std::move(e));
    }
    EPoly r = run.reduce_poly(run.eng.from_poly(f));
    return run.eng.to_poly(r, G.ring);
}

std::uint64_t quotient_dim(const GroebnerBasis& G) {
    const int n = G.ring->nvars();
    Engine eng = make_engine(G.ring, G.order);
    std::vector<std::vector<Exp>> leads;
    for (const auto& g : G.elements) {
        if (g.is_zero()) continue;
        EPoly e = eng.from_poly(g);
        leads.emplace_back(e.ex.begin(), e.ex.begin() + n);
    }
    for (const auto& L : leads) {
        bool constant = std::all_of(L.begin(), L.end(), [](Exp v) { return v == 0; });
        if (constant) return 0; // unit ideal
    }
    // finite iff every variable shows a pure power among the leads
    std::vector<std::uint32_t> bound(n, 0);
    for (int v = 0; v < n; ++v) {
        std::uint32_t best = 0;
        for (const auto& L : leads) {
            bool pure = true;
            for (int k = 0; k < n; ++k)
                if (k != v && L[k] != 0) { pure = false; break; }
            if (pure && L[v] > 0 && (best == 0 || L[v] < best)) best = L[v];
        }
        if (best == 0) return kInfiniteDim;
        bound[v] = best;
    }
    // group leads by their largest supported variable
    std::vector<std::vector<const std::vector<Exp>*>> at(n);
    for (const auto& L : leads) {
        int last = -1;
        for (int k = 0; k < n; ++k)
            if (L[k] != 0) last = k;
        if (last >= 0) at[last].push_back(&L);
    }
    std::uint64_t count = 0;
    std::vector<Exp> cur(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (std::uint32_t e = 0; e < bound[v]; ++e) {
            cur[v] = static_cast<Exp>(e);
            bool blocked = false;
            for (const auto* L : at[v]) {
                bool div = true;
                for (int k = 0; k <= v; ++k)
                    if ((*L)[k] > cur[k]) { div = false; break; }
                if (div) { blocked = true; break; }
            }
            if (blocked) break; // divisibility is monotone in the exponent
            rec(v + 1);
        }
        cur[v] = 0;
    };
    rec(0);
    return count;
}

int staircase_dim(const GroebnerBasis& G) {
    const int n = G.ring->nvars();
    Engine eng = make_engine(G.ring, G.order);
    std::vector<std::uint64_t> supports;
    for (const auto& g : G.elements) {
        if (g.is_zero()) continue;
        EPoly e = eng.from_poly(g);
        std::uint64_t s = 0;
        for (int k = 0; k < n; ++k)
            if (e.ex[k] != 0) s |= std::uint64_t{1} << k;
        if (s == 0) return -1; // unit ideal: empty variety
        supports.push_back(s);
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

    // maximal subset of variables containing no lead support; complement is a
    // minimal vertex cover of the support hypergraph
    std::map<std::uint64_t, int> memo;
    std::function<int(std::uint64_t)> best = [&](std::uint64_t universe) -> int {
        const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        std::uint64_t inside = universe & full;
        // first lead whose support fits inside the candidate set
        std::uint64_t pick = 0;
        for (auto s : supports)
            if ((s & ~inside) == 0) { pick = s; break; }
        if (pick == 0) return static_cast<int>(std::popcount(inside));
        auto it = memo.find(inside);
        if (it != memo.end()) return it->second;
        int r = 0;
        std::uint64_t rest = pick;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            r = std::max(r, best(inside & ~(std::uint64_t{1} << v)));
        }
        memo[inside] = r;
        return r;
    };
    return best(~std::uint64_t{0});
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
    GroebnerBasis G = groebner_basis(I);
    return normal_form(f, G).is_zero();
}

bool contains_one(const Ideal& I) {
    GroebnerBasis G = groebner_basis(I);
    for (const auto& g : G.elements)
        if (!g.is_zero() && g.max_total_degree() == 0) return true;
    return false;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw Error("saturate: zero polynomial");
    const RingPtr& ring = I.ring;
    const int m = ring->nvars();
    RingPtr ext = ring->with_prefix_var(fresh_var_name(ring, "_t"));
    std::vector<int> up(m);
    for (int i = 0; i < m; ++i) up[i] = i + 1;

    Ideal J(ext);
    for (const auto& g : I.generators)
        if (!g.is_zero()) J.add(g.mapped(ext, up));
    // 1 - t*f
    Polynomial tf = Polynomial::variable(ext, 0) * f.mapped(ext, up);
    J.add(Polynomial::constant(ext, 1) - tf);

    GroebnerBasis G = groebner_basis(J, MonomialOrder::block_elim(1));
    Ideal R(ring);
    std::vector<int> down(ext->nvars(), 0);
    for (int i = 0; i < m; ++i) down[i + 1] = i;
    for (const auto& g : G.elements) {
        bool uses_t = false;
        for (int t = 0; t < g.nterms() && !uses_t; ++t)
            if (g.exps(t)[0] != 0) uses_t = true;
        if (!uses_t) R.add(g.mapped(ring, down));
    }
    if (R.generators.empty()) R.add(Polynomial::zero(ring));
    return R;
}

Ideal ideal_intersect(const Ideal& A, const Ideal& B) {
    const RingPtr& ring = A.ring;
    bool a_zero = true, b_zero = true;
    for (const auto& f : A.generators)
        if (!f.is_zero()) a_zero = false;
    for (const auto& f : B.generators)
        if (!f.is_zero()) b_zero = false;
    if (a_zero) return A;
    if (b_zero) return B;

    const int m = ring->nvars();
    RingPtr ext = ring->with_prefix_var(fresh_var_name(ring, "_t"));
    std::vector<int> up(m);
    for (int i = 0; i < m; ++i) up[i] = i + 1;
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    Ideal J(ext);
    for (const auto& f : A.generators)
        if (!f.is_zero()) J.add(t * f.mapped(ext, up));
    for (const auto& f : B.generators)
        if (!f.is_zero()) J.add(one_minus_t * f.mapped(ext, up));

    GroebnerBasis G = groebner_basis(J, MonomialOrder::block_elim(1));
    Ideal R(ring);
    std::vector<int> down(ext->nvars(), 0);
    for (int i = 0; i < m; ++i) down[i + 1] = i;
    for (const auto& g : G.elements) {
        bool uses_t = false;
        for (int tt = 0; tt < g.nterms() && !uses_t; ++tt)
            if (g.exps(tt)[0] != 0) uses_t = true;
        if (!uses_t) R.add(g.mapped(ring, down));
    }
    if (R.generators.empty()) R.add(Polynomial::zero(ring));
    return R;
}

Ideal saturate_by_ideal(const Ideal& I, const Ideal& B) {
    Ideal J = I;
    for (int pass = 0; pass < 8; ++pass) {
        // intersection of the single-generator saturations of the current ideal
        Ideal next(I.ring);
        bool first = true;
        for (const auto& g : B.generators) {
            if (g.is_zero()) continue;
            Ideal part = saturate(J, g);
            next = first ? part : ideal_intersect(next, part);
            first = false;
        }
        if (first) return J; // B had no nonzero generators
        if (ideal_equal(next, J)) return next;
        J = std::move(next);
    }
    throw Error("saturate_by_ideal: did not stabilize");
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
    GroebnerBasis GA = groebner_basis(A);
    GroebnerBasis GB = groebner_basis(B);
    if (GA.elements.size() != GB.elements.size()) return false;
    for (std::size_t i = 0; i < GA.elements.size(); ++i)
        if (GA.elements[i] != GB.elements[i]) return false;
    return true;
}

} // namespace toricchar
