#include "toricchar/charclass.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

namespace toricchar {

namespace {

using i128 = __int128;

void run_parallel(int workers, std::vector<std::function<void()>>& tasks) {
    if (workers <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(tasks.size());
    auto body = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                tasks[i]();
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<int>(workers, static_cast<int>(tasks.size()));
    for (int t = 0; t < nt; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        i128 v = static_cast<i128>(r) * (n - k + i) / i;
        r = static_cast<long long>(v);
    }
    return r;
}

/// nef-basis coordinates of a Pic vector (the nef matrix is unimodular)
DegVec nef_coordinates(const ChowRing& chow, const DegVec& d) {
    const int q = chow.q();
    const auto& nef = chow.nef_vectors();
    // Gaussian elimination over rationals kept integral via Cramer on the
    // unimodular matrix: solve N c = d with N columns nef[k]
    std::vector<std::vector<long long>> N(q, std::vector<long long>(q));
    for (int r = 0; r < q; ++r)
        for (int k = 0; k < q; ++k) N[r][k] = nef[k][r];
    // Bareiss determinant helpers (small q)
    std::function<long long(std::vector<std::vector<long long>>)> det =
        [](std::vector<std::vector<long long>> a) -> long long {
        const int n = static_cast<int>(a.size());
        long long sign = 1;
        i128 prev = 1;
        std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        for (int k = 0; k < n - 1; ++k) {
            if (m[k][k] == 0) {
                int piv = -1;
                for (int i = k + 1; i < n; ++i)
                    if (m[i][k] != 0) { piv = i; break; }
                if (piv < 0) return 0;
                std::swap(m[k], m[piv]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return sign * static_cast<long long>(m[n - 1][n - 1]);
    };
    long long dN = det(N);
    if (dN != 1 && dN != -1) throw Error("nef basis is not unimodular");
    DegVec c(q);
    for (int k = 0; k < q; ++k) {
        auto Nk = N;
        for (int r = 0; r < q; ++r) Nk[r][k] = d[r];
        c[k] = det(Nk) * dN;
    }
    return c;
}

DegVec from_nef_coordinates(const ChowRing& chow, const DegVec& c) {
    const int q = chow.q();
    DegVec d(q, 0);
    for (int k = 0; k < q; ++k)
        for (int r = 0; r < q; ++r) d[r] += c[k] * chow.nef_vectors()[k][r];
    return d;
}

bool nonneg(const DegVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
}

/// substitute away affine-linear generators; returns the reduced ring, the
/// rewritten generators, or signals that the ideal contains a unit
struct LinearElimination {
    RingPtr ring;
    std::vector<Polynomial> gens;
    bool unit = false;
};

LinearElimination eliminate_linear(RingPtr ring, std::vector<Polynomial> gens) {
    const PrimeField F = ring->field();
    while (true) {
        int pick = -1, pivot = -1;
        for (std::size_t g = 0; g < gens.size() && pick < 0; ++g) {
            const Polynomial& f = gens[g];
            if (f.is_zero() || f.max_total_degree() > 1) continue;
            if (f.max_total_degree() == 0) return {ring, {}, true};
            // highest-index variable with a nonzero linear coefficient
            for (int t = 0; t < f.nterms(); ++t) {
                if (f.total_degree(t) != 1) continue;
                for (int v = ring->nvars() - 1; v > pivot; --v)
                    if (f.exps(t)[v] == 1) pivot = v;
            }
            pick = static_cast<int>(g);
        }
        if (pick < 0) break;

        // solve f = c*x + rest = 0 for x
        Polynomial f = gens[pick];
        std::vector<Exp> xe(ring->nvars(), 0);
        xe[pivot] = 1;
        std::uint32_t c = 0;
        for (int t = 0; t < f.nterms(); ++t)
            if (std::equal(xe.begin(), xe.end(), f.exps(t))) c = f.coeff(t);
        Polynomial rest = f - Polynomial::monomial(ring, xe, c);
        Polynomial phi = rest.scaled(F.neg(F.inv(c)));

        // rewrite everything else in the ring without the pivot variable
        std::vector<std::string> names;
        std::vector<DegVec> degs;
        std::vector<int> down(ring->nvars(), -1);
        for (int v = 0; v < ring->nvars(); ++v) {
            if (v == pivot) continue;
            down[v] = static_cast<int>(names.size());
            names.push_back(ring->name(v));
            degs.push_back(ring->degree_of_var(v));
        }
        // grading is irrelevant here, mark everything auxiliary-free as is;
        // aux flags are not preserved, which only matters for random forms
        RingPtr smaller = GradedRing::make(names, degs, F);

        std::vector<Polynomial> next;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (static_cast<int>(g) == pick) continue;
            Polynomial h = gens[g].substitute(pivot, phi);
            if (h.is_zero()) continue;
            if (h.max_total_degree() == 0) return {ring, {}, true};
            next.push_back(h.mapped(smaller, down));
        }
        ring = smaller;
        gens = std::move(next);
    }
    return {ring, std::move(gens), false};
}

std::uint64_t zero_dim_count(RingPtr ring, std::vector<Polynomial> gens) {
    LinearElimination le = eliminate_linear(std::move(ring), std::move(gens));
    if (le.unit) return 0;
    if (le.gens.empty()) return kInfiniteDim; // no constraints left
    Ideal I(le.ring, std::move(le.gens));
    GroebnerBasis G = groebner_basis(I);
    return quotient_dim(G);
}

} // namespace

// ---------------------------------------------------------------------------

ToricContext ToricContext::create(const Fan& fan, const PrimeField& field, int workers) {
    require_valid(fan);
    ToricContext ctx;
    ctx.fan = fan;
    ctx.ring = cox_ring(fan, field);
    ctx.chow = ChowRing::build(fan, ctx.ring);
    ctx.workers = workers < 1 ? 1 : workers;
    return ctx;
}

Subscheme prepare_generators(const ToricContext& ctx, std::vector<Polynomial> gens) {
    Subscheme V;
    V.ctx = &ctx;
    for (const auto& f : gens) {
        if (f.is_zero()) throw ZeroPolynomialError("subscheme generator is zero");
        if (f.max_total_degree() == 0)
            throw Error("subscheme generator is a nonzero constant (empty subscheme)");
    }
    V.raw = gens;
    if (gens.empty()) return V;

    const ChowRing& chow = *ctx.chow;
    const int q = chow.q();
    std::vector<DegVec> degs, coords;
    for (const auto& f : gens) {
        degs.push_back(f.multidegree());
        coords.push_back(nef_coordinates(chow, degs.back()));
    }
    DegVec target = coords[0];
    for (const auto& c : coords)
        for (int k = 0; k < q; ++k) target[k] = std::max(target[k], c[k]);

    auto degree_ok = [&](const DegVec& nefc) {
        DegVec d = from_nef_coordinates(chow, nefc);
        if (!nonneg(nefc) && !is_nef(d, ctx.fan)) return false;
        return true;
    };

    // smallest nonnegative raise (by total, then lex) making the common
    // degree and every complementary degree nef
    const int kRaiseBound = 32;
    DegVec chosen;
    for (int total = 0; total <= kRaiseBound && chosen.empty(); ++total) {
        std::vector<Exp> delta(q, 0);
        std::function<void(int, int)> walk = [&](int var, int left) {
            if (!chosen.empty()) return;
            if (var == q) {
                if (left != 0) return;
                DegVec beta = target;
                for (int k = 0; k < q; ++k) beta[k] += delta[k];
                if (!degree_ok(beta)) return;
                for (const auto& c : coords) {
                    DegVec gap(q);
                    for (int k = 0; k < q; ++k) gap[k] = beta[k] - c[k];
                    if (!degree_ok(gap)) return;
                }
                chosen = beta;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                delta[var] = static_cast<Exp>(e);
                walk(var + 1, left - e);
            }
            delta[var] = 0;
        };
        walk(0, total);
    }
    if (chosen.empty())
        throw DegreeNotNefError("no common nef degree reachable for the generators");

    V.alpha = from_nef_coordinates(chow, chosen);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        DegVec gap(q);
        for (int k = 0; k < q; ++k) gap[k] = chosen[k] - coords[i][k];
        bool zero = std::all_of(gap.begin(), gap.end(), [](long long v) { return v == 0; });
        if (zero) {
            V.prepared.push_back(gens[i]);
            continue;
        }
        DegVec gapd = from_nef_coordinates(chow, gap);
        auto monos = ctx.ring->monomials_of_degree(gapd);
        if (monos.empty())
            throw DegreeNotNefError("raising degree has no monomials (unexpected for a nef class)");
        for (const auto& m : monos)
            V.prepared.push_back(Polynomial::monomial(ctx.ring, m, 1) * gens[i]);
    }
    // drop exact duplicates, keeping first occurrences
    std::vector<Polynomial> dedup;
    for (auto& f : V.prepared) {
        bool seen = false;
        for (const auto& g : dedup)
            if (f == g) { seen = true; break; }
        if (!seen) dedup.push_back(std::move(f));
    }
    V.prepared = std::move(dedup);
    return V;
}

int subscheme_dim(const ToricContext& ctx, const std::vector<Polynomial>& gens, SeededRng& rng) {
    Ideal I(ctx.ring);
    for (const auto& f : gens)
        if (!f.is_zero()) I.add(f);
    Ideal LA = dehomogenizing_ideal(ctx.fan, ctx.ring, rng);
    for (const auto& f : LA.generators) I.add(f);
    LinearElimination le = eliminate_linear(ctx.ring, I.generators);
    if (le.unit) return -1;
    int eliminated = ctx.ring->nvars() - le.ring->nvars();
    if (le.gens.empty()) return le.ring->nvars(); // only the eliminated constraints
    GroebnerBasis G = groebner_basis(Ideal(le.ring, le.gens));
    int d = staircase_dim(G);
    (void)eliminated;
    return d;
}

ChowClass DegreeTable::G() const {
    ChowClass g;
    for (const auto& y : Y) g = g + y;
    return g;
}

DegreeTable projective_degrees(const Subscheme& V, SeededRng& rng) {
    const ToricContext& ctx = *V.ctx;
    const ChowRing& chow = *ctx.chow;
    const int n = chow.dim();
    if (V.prepared.empty()) throw Error("projective_degrees: empty generator set");
    if (!affine_codim_condition(ctx.fan))
        throw ConditionFailedError("affine codimension condition fails for this fan");
    if (!is_nef(V.alpha, ctx.fan))
        throw DegreeNotNefError("common generator degree is not nef");

    const int r = static_cast<int>(V.prepared.size()) - 1;
    const int top = std::min(n, r);

    SeededRng dim_rng = rng.derive(0xD1);
    int dim = subscheme_dim(ctx, V.prepared, dim_rng);
    int codim = n - dim; // dim = -1 gives n+1: empty subscheme

    DegreeTable table;
    table.codim = codim;
    table.Y.assign(n + 1, chow.zero());
    table.gammas.assign(n + 1, {});
    table.counts.assign(n + 1, {});
    ChowClass A = chow.class_from_pic(V.alpha);
    for (int iota = 0; iota <= n; ++iota) {
        if (iota > top) continue; // zero
        if (iota < codim) table.Y[iota] = A.pow(static_cast<unsigned>(iota));
    }
    if (codim > top) return table;

    // the random combinations are drawn once per run
    const PrimeField& F = ctx.ring->field();
    const int nmax = top;
    SeededRng comb_rng = rng.derive(0xC0);
    std::vector<Polynomial> P;
    for (int j = 0; j < nmax; ++j) {
        Polynomial pj = Polynomial::zero(ctx.ring);
        for (const auto& f : V.prepared) pj = pj + f.scaled(F.random_nonzero(comb_rng));
        P.push_back(std::move(pj));
    }
    Polynomial theta = Polynomial::zero(ctx.ring);
    for (const auto& f : V.prepared) theta = theta + f.scaled(F.random_nonzero(comb_rng));

    RingPtr ext = ctx.ring->with_suffix_var("T");
    std::vector<int> up(ctx.ring->nvars());
    std::iota(up.begin(), up.end(), 0);
    const int tvar = ext->nvars() - 1;
    // S = 1 - T * theta
    Polynomial S = Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, tvar) * theta.mapped(ext, up);

    struct Task {
        int iota, i;
        std::uint64_t count = 0;
    };
    std::vector<Task> tasks;
    for (int iota = std::max(codim, 1); iota <= top; ++iota)
        for (int i = 0; i < static_cast<int>(chow.omega(iota).size()); ++i)
            tasks.push_back({iota, i});

    auto run_task = [&](Task& task) {
        for (int attempt = 0;; ++attempt) {
            SeededRng trng = rng.derive(0xA0 + attempt, static_cast<std::uint64_t>(task.iota),
                                        static_cast<std::uint64_t>(task.i));
            std::vector<Polynomial> gens;
            for (int j = 0; j < task.iota; ++j) gens.push_back(P[j].mapped(ext, up));
            gens.push_back(S);
            Ideal La = chow.complementary_ideal(task.iota, task.i, trng);
            for (const auto& f : La.generators) gens.push_back(f.mapped(ext, up));
            Ideal LA = dehomogenizing_ideal(ctx.fan, ctx.ring, trng);
            for (const auto& f : LA.generators) gens.push_back(f.mapped(ext, up));

            std::uint64_t d = zero_dim_count(ext, std::move(gens));
            if (d != kInfiniteDim) {
                task.count = d;
                return;
            }
            if (attempt >= 3)
                throw NotZeroDimensionalError(
                    "projective degree system stayed positive-dimensional after retries "
                    "(iota=" + std::to_string(task.iota) + ", basis cycle " +
                    std::to_string(task.i) + ")");
        }
    };

    std::vector<std::function<void()>> jobs;
    for (auto& t : tasks) jobs.push_back([&run_task, &t]() { run_task(t); });
    run_parallel(ctx.workers, jobs);

    for (int iota = std::max(codim, 1); iota <= top; ++iota) {
        const int mu = static_cast<int>(chow.omega(iota).size());
        std::vector<long long> counts(mu, 0);
        for (const auto& t : tasks)
            if (t.iota == iota) counts[t.i] = static_cast<long long>(t.count);
        std::vector<long long> gammas = chow.extract_gammas(iota, counts);
        ChowClass y = chow.zero();
        for (int i = 0; i < mu; ++i)
            y = y + chow.omega_class(iota, i).scaled(gammas[i]);
        table.Y[iota] = y;
        table.counts[iota] = counts;
        table.gammas[iota] = gammas;
    }
    return table;
}

namespace {

ChowClass segre_from_table(const ChowRing& chow, const DegVec& alpha, const DegreeTable& table) {
    ChowClass A = chow.class_from_pic(alpha);
    ChowClass inv = chow.invert_unit(chow.one() + A);
    ChowClass acc = inv; // inv^(iota+1) as iota walks up
    ChowClass sum = chow.zero();
    for (std::size_t iota = 0; iota < table.Y.size(); ++iota) {
        if (!table.Y[iota].is_zero()) sum = sum + table.Y[iota] * acc;
        acc = acc * inv;
    }
    return chow.one() - sum;
}

} // namespace

ChowClass segre_class(const Subscheme& V, SeededRng& rng) {
    DegreeTable table = projective_degrees(V, rng);
    return segre_from_table(*V.ctx->chow, V.alpha, table);
}

ChowClass chern_fulton(const Subscheme& V, SeededRng& rng) {
    return V.ctx->chow->chern_tangent() * segre_class(V, rng);
}

Ideal singularity_subscheme(const Subscheme& V) {
    const ToricContext& ctx = *V.ctx;
    const RingPtr& ring = ctx.ring;
    if (V.raw.empty()) throw Error("singularity_subscheme: empty generator set");

    if (V.raw.size() == 1) {
        // hypersurface: the partial derivatives suffice (f lies in the ideal
        // they generate by the graded Euler relations)
        Ideal J(ring);
        for (int v = 0; v < ring->nvars(); ++v) {
            Polynomial d = V.raw[0].derivative(v);
            if (!d.is_zero()) J.add(std::move(d));
        }
        if (J.generators.empty())
            throw Error("singularity_subscheme: all partial derivatives vanish");
        return J;
    }

    const int s = static_cast<int>(V.raw.size());
    SeededRng dim_rng(0x51D6'0000u ^ static_cast<std::uint64_t>(s));
    int dim = subscheme_dim(ctx, V.raw, dim_rng);
    int codim = ctx.fan.dim - dim;
    if (codim != s)
        throw NotCompleteIntersectionError(
            "subscheme has codimension " + std::to_string(codim) + " but " +
            std::to_string(s) + " generators");

    // Jacobian and its maximal minors
    const int m = ring->nvars();
    std::vector<std::vector<Polynomial>> J;
    for (const auto& f : V.raw) {
        std::vector<Polynomial> row;
        for (int v = 0; v < m; ++v) row.push_back(f.derivative(v));
        J.push_back(std::move(row));
    }
    std::function<Polynomial(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rows, const std::vector<int>& cols) -> Polynomial {
        if (rows.size() == 1) return J[rows[0]][cols[0]];
        Polynomial acc = Polynomial::zero(ring);
        std::vector<int> subrows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const Polynomial& entry = J[rows[0]][cols[k]];
            if (entry.is_zero()) continue;
            std::vector<int> subcols;
            for (std::size_t t = 0; t < cols.size(); ++t)
                if (t != k) subcols.push_back(cols[t]);
            Polynomial minor = det(subrows, subcols);
            Polynomial contrib = entry * minor;
            acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
        }
        return acc;
    };

    Ideal K(ring);
    for (const auto& f : V.raw) K.add(f);
    std::vector<int> rows(s);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> cols(s);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        Polynomial d = det(rows, cols);
        if (!d.is_zero()) K.add(std::move(d));
        int k = s - 1;
        while (k >= 0 && cols[k] == m - s + k) --k;
        if (k < 0) break;
        ++cols[k];
        for (int t = k + 1; t < s; ++t) cols[t] = cols[t - 1] + 1;
    }
    return saturate_by_ideal(K, irrelevant_ideal(ctx.fan, ring));
}

ChowClass csm_hypersurface(const ToricContext& ctx, const Polynomial& f, SeededRng& rng) {
    if (f.is_zero()) throw ZeroPolynomialError("csm_hypersurface: zero polynomial");
    if (f.max_total_degree() == 0)
        throw Error("csm_hypersurface: constant polynomial does not define a hypersurface");
    const ChowRing& chow = *ctx.chow;
    const int n = chow.dim();
    DegVec wd = f.multidegree();
    if (!is_nef(wd, ctx.fan))
        throw DegreeNotNefError("hypersurface class is not nef");
    ChowClass W = chow.class_from_pic(wd);

    std::vector<Polynomial> partials;
    for (int v = 0; v < ctx.ring->nvars(); ++v) {
        Polynomial d = f.derivative(v);
        if (!d.is_zero()) partials.push_back(std::move(d));
    }
    if (partials.empty()) throw Error("csm_hypersurface: all partial derivatives vanish");

    Subscheme Y = prepare_generators(ctx, std::move(partials));
    SeededRng srng = rng.derive(0x5E);
    ChowClass sY = segre_class(Y, srng);

    // per-dimension components of s(Y): dimension k lives in codimension n-k
    std::vector<ChowClass> s_dim(n + 1, chow.zero());
    for (int k = 0; k <= n; ++k) s_dim[k] = sY.graded_part(n - k);
    std::vector<ChowClass> Wpow{chow.one()};
    for (int j = 1; j <= n; ++j) Wpow.push_back(Wpow.back() * W);

    ChowClass sV = W * chow.invert_unit(chow.one() + W);
    ChowClass adjust = chow.zero();
    for (int i = 0; i <= n; ++i) {
        int sign = ((n - i) % 2 == 0) ? 1 : -1;
        for (int j = 0; j <= n - i; ++j) {
            if (i + j > n) break;
            if (s_dim[i + j].is_zero()) continue;
            adjust = adjust + (Wpow[j] * s_dim[i + j]).scaled(sign * binomial(n - i, j));
        }
    }
    return chow.chern_tangent() * (sV + adjust);
}

ChowClass csm(const Subscheme& V, SeededRng& rng, unsigned subset_cap,
              const std::function<void(const std::string&)>& warn) {
    const ToricContext& ctx = *V.ctx;
    const ChowRing& chow = *ctx.chow;
    if (V.raw.empty()) return chow.chern_tangent(); // whole space

    const std::size_t ngen = V.raw.size();
    if (ngen > 20) throw Error("csm: too many generators for inclusion/exclusion");
    const std::uint64_t nsub = (std::uint64_t{1} << ngen) - 1;
    if ((std::uint64_t{1} << ngen) > subset_cap && warn)
        warn("inclusion/exclusion over " + std::to_string(nsub) +
             " generator subsets exceeds the configured cap");

    ChowClass acc = chow.zero();
    for (std::uint64_t mask = 1; mask <= nsub; ++mask) {
        Polynomial g = Polynomial::constant(ctx.ring, 1);
        int size = 0;
        for (std::size_t i = 0; i < ngen; ++i)
            if (mask & (std::uint64_t{1} << i)) {
                g = g * V.raw[i];
                ++size;
            }
        SeededRng srng = rng.derive(0xCC, mask);
        ChowClass term = csm_hypersurface(ctx, g, srng);
        acc = (size % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

ChowClass csm_complete_intersection(const Subscheme& V, SeededRng& rng, bool verify_front) {
    const ToricContext& ctx = *V.ctx;
    const ChowRing& chow = *ctx.chow;
    const int n = chow.dim();
    if (V.raw.empty()) return chow.chern_tangent();
    const int r = static_cast<int>(V.raw.size()) - 1;

    if (verify_front && r >= 1) {
        std::vector<Polynomial> front(V.raw.begin(), V.raw.end() - 1);
        Subscheme F = prepare_generators(ctx, front);
        Ideal sing = singularity_subscheme(F);
        if (!contains_one(sing))
            throw Error("csm_complete_intersection: the leading intersection is singular");
    }

    Ideal Yideal = singularity_subscheme(V);
    ChowClass sY = chow.zero();
    if (!contains_one(Yideal)) {
        Subscheme Y = prepare_generators(ctx, Yideal.generators);
        SeededRng srng = rng.derive(0xC1);
        sY = segre_class(Y, srng);
    }

    std::vector<ChowClass> Wcls;
    for (const auto& f : V.raw) Wcls.push_back(chow.class_from_pic(f.multidegree()));
    const ChowClass& Wr = Wcls.back();

    ChowClass E = chow.one();
    ChowClass prodW = chow.one();
    for (const auto& w : Wcls) {
        E = E * (chow.one() + w);
        prodW = prodW * w;
    }

    // c_i: codimension-i components of the total class of the bundle
    std::vector<ChowClass> c(n + 1, chow.zero());
    for (int i = 0; i <= n; ++i) c[i] = E.graded_part(i);

    std::vector<ChowClass> Wrpow{chow.one()};
    for (int j = 1; j <= std::max(n, r); ++j) Wrpow.push_back(Wrpow.back() * Wr);

    ChowClass twist = chow.zero();
    int rsign = (r % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= r; ++j)
        for (int i = 0; i <= j; ++i) {
            long long coeff = binomial(r - i, j - i) * ((i % 2 == 0) ? 1 : -1) * rsign;
            if (coeff == 0 || c[i].is_zero()) continue;
            twist = twist + (Wrpow[j - i] * c[i]).scaled(coeff);
        }

    ChowClass invWr = chow.invert_unit(chow.one() + Wr);
    std::vector<ChowClass> invWrpow{chow.one()};
    for (int i = 1; i <= n; ++i) invWrpow.push_back(invWrpow.back() * invWr);
    ChowClass ssum = chow.zero();
    for (int i = 0; i <= n; ++i) {
        ChowClass si = sY.graded_part(i);
        if (si.is_zero()) continue;
        ssum = ssum + (si * invWrpow[i]).scaled((i % 2 == 0) ? 1 : -1);
    }

    ChowClass invE = chow.invert_unit(E);
    return chow.chern_tangent() * invE * (prodW + twist * ssum);
}

ChowClass csm_smooth_times_singular(const ToricContext& ctx,
                                    const std::vector<Polynomial>& Z,
                                    const Polynomial& f1, const Polynomial& f2,
                                    SeededRng& rng) {
    for (const Polynomial* f : {&f1, &f2}) {
        if (f->is_zero()) throw ZeroPolynomialError("csm_smooth_times_singular: zero polynomial");
        if (f->max_total_degree() == 0)
            throw Error("csm_smooth_times_singular: constant input is not a hypersurface");
    }
    auto with = [&](const Polynomial& extra) {
        std::vector<Polynomial> gens = Z;
        gens.push_back(extra);
        return prepare_generators(ctx, gens);
    };
    SeededRng r1 = rng.derive(1), r2 = rng.derive(2), r3 = rng.derive(3);
    ChowClass a = csm_complete_intersection(with(f1), r1);
    ChowClass b = csm_complete_intersection(with(f2), r2);
    ChowClass c = csm_complete_intersection(with(f1 * f2), r3);
    return a + b - c;
}

long long euler(const Subscheme& V, SeededRng& rng) {
    const ChowRing& chow = *V.ctx->chow;
    if (V.raw.empty()) return chow.ncones();
    return chow.degree(csm(V, rng));
}

} // namespace toricchar
