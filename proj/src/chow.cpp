#include "toricchar/chow.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace toricchar {

namespace {

using i128 = __int128;

long long narrow(i128 v, const char* what) {
    long long r = static_cast<long long>(v);
    if (static_cast<i128>(r) != v) throw OverflowError(std::string("chow: overflow in ") + what);
    return r;
}

i128 igcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// exact rational on 64-bit words with checked intermediates
struct Rat {
    long long num = 0, den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    static Rat make(i128 n, i128 d) {
        if (d == 0) throw Error("chow: rational division by zero");
        if (d < 0) { n = -n; d = -d; }
        i128 g = igcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num = narrow(n, "rational numerator");
        r.den = narrow(d, "rational denominator");
        return r;
    }
    bool zero() const { return num == 0; }
    bool integral() const { return den == 1; }
    Rat operator+(const Rat& o) const {
        return make(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                    static_cast<i128>(den) * o.den);
    }
    Rat operator-(const Rat& o) const {
        return make(static_cast<i128>(num) * o.den - static_cast<i128>(o.num) * den,
                    static_cast<i128>(den) * o.den);
    }
    Rat operator*(const Rat& o) const {
        return make(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den);
    }
    Rat operator/(const Rat& o) const {
        return make(static_cast<i128>(num) * o.den, static_cast<i128>(den) * o.num);
    }
    Rat operator-() const {
        Rat r;
        r.num = -num;
        r.den = den;
        return r;
    }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
};

int zcmp(const std::vector<Exp>& a, const std::vector<Exp>& b) {
    long long da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

bool zdivides(const std::vector<Exp>& d, const std::vector<Exp>& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

struct QTerm {
    std::vector<Exp> e;
    Rat c;
};
using QPoly = std::vector<QTerm>; // descending degrevlex, no zero coefficients

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size()) c = -1;
        else if (j == b.size()) c = 1;
        else c = zcmp(a[i].e, b[j].e);
        if (c > 0) r.push_back(a[i++]);
        else if (c < 0) r.push_back(b[j++]);
        else {
            Rat s = a[i].c + b[j].c;
            if (!s.zero()) r.push_back({a[i].e, s});
            ++i;
            ++j;
        }
    }
    return r;
}

QPoly qp_mul_term(const QPoly& a, const std::vector<Exp>& mono, const Rat& c, std::size_t skip = 0) {
    QPoly r;
    r.reserve(a.size() - skip);
    for (std::size_t t = skip; t < a.size(); ++t) {
        std::vector<Exp> e = a[t].e;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<Exp>(e[k] + mono[k]);
        r.push_back({std::move(e), a[t].c * c});
    }
    return r;
}

QPoly qp_normal_form(QPoly f, const std::vector<QPoly>& G) {
    QPoly out;
    while (!f.empty()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.empty()) continue;
            if (zdivides(g[0].e, f[0].e)) {
                std::vector<Exp> q = f[0].e;
                for (std::size_t k = 0; k < q.size(); ++k)
                    q[k] = static_cast<Exp>(q[k] - g[0].e[k]);
                Rat c = f[0].c / g[0].c;
                f.erase(f.begin());
                f = qp_add(f, qp_mul_term(g, q, -c, 1));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.push_back(f.front());
            f.erase(f.begin());
        }
    }
    return out;
}

std::vector<QPoly> qp_buchberger(std::vector<QPoly> F) {
    std::vector<QPoly> G;
    for (auto& f : F)
        if (!f.empty()) G.push_back(std::move(f));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const auto& li = G[i][0].e;
        const auto& lj = G[j][0].e;
        bool coprime = true;
        for (std::size_t k = 0; k < li.size(); ++k)
            if (li[k] && lj[k]) { coprime = false; break; }
        if (coprime) continue;
        std::vector<Exp> lcm(li.size());
        for (std::size_t k = 0; k < li.size(); ++k) lcm[k] = std::max(li[k], lj[k]);
        std::vector<Exp> qi = lcm, qj = lcm;
        for (std::size_t k = 0; k < li.size(); ++k) {
            qi[k] = static_cast<Exp>(qi[k] - li[k]);
            qj[k] = static_cast<Exp>(qj[k] - lj[k]);
        }
        QPoly s = qp_add(qp_mul_term(G[i], qi, Rat(1) / G[i][0].c),
                         qp_mul_term(G[j], qj, -(Rat(1) / G[j][0].c)));
        s = qp_normal_form(std::move(s), G);
        if (!s.empty()) {
            for (std::size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
            G.push_back(std::move(s));
        }
    }
    // reduce to the unique reduced monic basis
    std::vector<QPoly> R;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j)
            if (i != j && zdivides(G[j][0].e, G[i][0].e) &&
                !(G[i][0].e == G[j][0].e && i < j))
                redundant = true;
        if (!redundant) R.push_back(G[i]);
    }
    for (std::size_t i = 0; i < R.size(); ++i) {
        std::vector<QPoly> others;
        for (std::size_t j = 0; j < R.size(); ++j)
            if (j != i) others.push_back(R[j]);
        R[i] = qp_normal_form(R[i], others);
        Rat lc = R[i][0].c;
        for (auto& t : R[i]) t.c = t.c / lc;
    }
    std::sort(R.begin(), R.end(),
              [](const QPoly& a, const QPoly& b) { return zcmp(a[0].e, b[0].e) < 0; });
    return R;
}

} // namespace

// ---------------------------------------------------------------------------

struct ChowRing::QPolyGB {
    std::vector<QPoly> gb;
};

namespace {

std::vector<ChowClass::Term> zsort_combine(std::vector<ChowClass::Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const ChowClass::Term& a, const ChowClass::Term& b) { return zcmp(a.e, b.e) > 0; });
    std::vector<ChowClass::Term> out;
    for (auto& t : raw) {
        if (!out.empty() && out.back().e == t.e) {
            out.back().c = narrow(static_cast<i128>(out.back().c) + t.c, "coefficient addition");
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// ChowClass operators (delegate the ring work to ChowRing)

ChowClass ChowClass::operator+(const ChowClass& o) const {
    if (!ring_) return o;
    if (!o.ring_) return *this;
    std::vector<Term> raw = terms_;
    raw.insert(raw.end(), o.terms_.begin(), o.terms_.end());
    ChowClass r;
    r.ring_ = ring_;
    r.terms_ = zsort_combine(std::move(raw));
    return r;
}

ChowClass ChowClass::operator-() const {
    ChowClass r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const { return *this + (-o); }

ChowClass ChowClass::scaled(long long c) const {
    ChowClass r;
    r.ring_ = ring_;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = narrow(static_cast<i128>(t.c) * c, "scalar multiple");
    return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
    ChowClass r;
    r.ring_ = ring_ ? ring_ : o.ring_;
    if (!ring_ || !o.ring_) return r; // default-constructed zero
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Term t;
            t.e = a.e;
            for (std::size_t k = 0; k < t.e.size(); ++k)
                t.e[k] = static_cast<Exp>(t.e[k] + b.e[k]);
            t.c = narrow(static_cast<i128>(a.c) * b.c, "class product");
            raw.push_back(std::move(t));
        }
    return ring_->reduce_terms(std::move(raw));
}

ChowClass ChowClass::pow(unsigned e) const {
    if (!ring_) throw Error("pow on an unattached class");
    ChowClass r = ring_->one();
    ChowClass b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool ChowClass::operator==(const ChowClass& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

ChowClass ChowClass::graded_part(int codim) const {
    ChowClass r;
    r.ring_ = ring_;
    for (const auto& t : terms_) {
        int d = 0;
        for (auto v : t.e) d += v;
        if (d == codim) r.terms_.push_back(t);
    }
    return r;
}

long long ChowClass::constant_term() const {
    for (const auto& t : terms_) {
        bool z = std::all_of(t.e.begin(), t.e.end(), [](Exp v) { return v == 0; });
        if (z) return t.c;
    }
    return 0;
}

long long ChowClass::coeff_of(const std::vector<Exp>& e) const {
    for (const auto& t : terms_)
        if (t.e == e) return t.c;
    return 0;
}

std::string ChowClass::render() const {
    if (!ring_) return "0";
    return ring_->render(*this);
}

// ---------------------------------------------------------------------------
// ChowRing

ChowRingPtr ChowRing::build(const Fan& fan, RingPtr cox) {
    require_valid(fan);
    auto ring = std::shared_ptr<ChowRing>(new ChowRing());
    ChowRing& R = *ring;
    R.fan_ = fan;
    R.cox_ = std::move(cox);
    R.n_ = fan.dim;
    R.q_ = fan.nrays() - fan.dim;
    R.ncones_ = static_cast<int>(fan.max_cones.size());

    ClassGroupGrading g = class_group_grading(fan);

    // display names for the free classes
    if (!fan.factor_dims.empty()) {
        for (int k = 0; k < R.q_; ++k) R.names_.push_back("h" + std::to_string(k + 1));
    } else {
        for (int k = 0; k < R.q_; ++k)
            R.names_.push_back("h" + std::to_string(g.basis_vars[k]));
    }

    // substitution: x_j maps to its divisor class written in the free basis,
    // which is exactly the degree column of x_j
    R.subst_.resize(fan.nrays());
    for (int j = 0; j < fan.nrays(); ++j) {
        for (int k = 0; k < R.q_; ++k) {
            if (g.degrees[j][k] == 0) continue;
            ChowClass::Term t;
            t.e.assign(R.q_, 0);
            t.e[k] = 1;
            t.c = g.degrees[j][k];
            R.subst_[j].push_back(std::move(t));
        }
        R.subst_[j] = zsort_combine(std::move(R.subst_[j]));
    }

    // Stanley-Reisner generators, substituted into the free classes
    std::vector<QPoly> sr;
    for (const auto& mono : stanley_reisner_monomials(fan)) {
        QPoly prod{QTerm{std::vector<Exp>(R.q_, 0), Rat(1)}};
        for (int j = 0; j < fan.nrays(); ++j) {
            for (Exp rep = 0; rep < mono[j]; ++rep) {
                QPoly lin;
                for (const auto& t : R.subst_[j]) lin.push_back({t.e, Rat(t.c)});
                QPoly next;
                for (const auto& a : prod)
                    next = qp_add(next, qp_mul_term(lin, a.e, a.c));
                prod = std::move(next);
            }
        }
        sr.push_back(std::move(prod));
    }
    R.gb_ = std::make_shared<QPolyGB>();
    R.gb_->gb = qp_buchberger(std::move(sr));

    // standard monomials per codimension
    R.std_monomials_.assign(R.n_ + 1, {});
    R.ranks_.assign(R.n_ + 1, 0);
    std::function<void(int, int, std::vector<Exp>&)> enumerate =
        [&](int var, int left, std::vector<Exp>& cur) {
            if (var == R.q_ - 1) {
                cur[var] = static_cast<Exp>(left);
                bool standard = true;
                for (const auto& gpoly : R.gb_->gb)
                    if (zdivides(gpoly[0].e, cur)) { standard = false; break; }
                if (standard) {
                    int d = 0;
                    for (auto v : cur) d += v;
                    R.std_monomials_[d].push_back(cur);
                }
                cur[var] = 0;
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[var] = static_cast<Exp>(e);
                enumerate(var + 1, left - e, cur);
            }
            cur[var] = 0;
        };
    for (int d = 0; d <= R.n_; ++d) {
        std::vector<Exp> cur(R.q_, 0);
        if (R.q_ == 1) {
            cur[0] = static_cast<Exp>(d);
            bool standard = true;
            for (const auto& gpoly : R.gb_->gb)
                if (zdivides(gpoly[0].e, cur)) { standard = false; break; }
            if (standard) R.std_monomials_[d].push_back(cur);
        } else {
            enumerate(0, d, cur);
        }
    }
    int total = 0;
    for (int d = 0; d <= R.n_; ++d) {
        std::sort(R.std_monomials_[d].begin(), R.std_monomials_[d].end());
        R.ranks_[d] = static_cast<int>(R.std_monomials_[d].size());
        total += R.ranks_[d];
    }
    if (total != R.ncones_)
        throw Error("chow: rank sum " + std::to_string(total) + " does not match the " +
                    std::to_string(R.ncones_) + " maximal cones");
    if (R.ranks_[R.n_] != 1)
        throw Error("chow: top graded piece does not have rank one");
    R.point_monomial_ = R.std_monomials_[R.n_][0];

    // normalization: the product of the variables of the first maximal cone
    // is the class of a torus-fixed point
    {
        ChowClass ref = R.one();
        for (int j : fan.max_cones[0]) ref = ref * R.var_class(j);
        if (ref.nterms() != 1 || ref.terms()[0].e != R.point_monomial_ ||
            (ref.terms()[0].c != 1 && ref.terms()[0].c != -1))
            throw Error("chow: reference point class is not +-1 times the top monomial");
        R.point_sign_ = static_cast<int>(ref.terms()[0].c);
    }

    R.nef_ = nef_basis(fan);

    // point class as a nef-basis monomial, then the per-codimension bases;
    // prefer a choice making the complementary pairing the identity
    std::vector<std::vector<Exp>> zeta_candidates;
    {
        std::function<void(int, int, std::vector<Exp>&)> tuples =
            [&](int var, int left, std::vector<Exp>& cur) {
                if (var == R.q_ - 1) {
                    cur[var] = static_cast<Exp>(left);
                    ChowClass m = R.nef_monomial(cur);
                    if (R.degree(m) == 1 && m.nterms() == 1) zeta_candidates.push_back(cur);
                    cur[var] = 0;
                    return;
                }
                for (int e = 0; e <= left; ++e) {
                    cur[var] = static_cast<Exp>(e);
                    tuples(var + 1, left - e, cur);
                }
                cur[var] = 0;
            };
        std::vector<Exp> cur(R.q_, 0);
        if (R.q_ == 1) {
            cur[0] = static_cast<Exp>(R.n_);
            ChowClass m = R.nef_monomial(cur);
            if (R.degree(m) == 1 && m.nterms() == 1) zeta_candidates.push_back(cur);
        } else {
            tuples(0, R.n_, cur);
        }
    }
    if (zeta_candidates.empty())
        throw PointClassNotMonomialError(
            "no monomial in the nef basis equals the class of a point");

    struct Attempt {
        std::vector<Exp> zeta;
        std::vector<std::vector<std::vector<Exp>>> omega;
        std::vector<std::vector<std::vector<long long>>> gram;
        std::vector<char> orthogonal;
        bool viable = false;
        bool fully_orthogonal = false;
    };

    auto try_zeta = [&](const std::vector<Exp>& zeta) {
        Attempt at;
        at.zeta = zeta;
        at.omega.assign(R.n_ + 1, {});
        at.gram.assign(R.n_ + 1, {});
        at.orthogonal.assign(R.n_ + 1, 1);
        for (int iota = 0; iota <= R.n_; ++iota) {
            // candidate monomials in the nef classes dividing zeta
            std::vector<std::vector<Exp>> cands;
            std::function<void(int, int, std::vector<Exp>&)> gen =
                [&](int var, int left, std::vector<Exp>& cur) {
                    if (var == R.q_) {
                        if (left == 0) cands.push_back(cur);
                        return;
                    }
                    for (int e = 0; e <= std::min<int>(left, zeta[var]); ++e) {
                        cur[var] = static_cast<Exp>(e);
                        gen(var + 1, left - e, cur);
                        cur[var] = 0;
                    }
                };
            std::vector<Exp> cur(R.q_, 0);
            gen(0, iota, cur);
            std::sort(cands.begin(), cands.end());

            // greedy rank selection of reductions over Q
            const auto& basis = R.std_monomials_[iota];
            const int rank_needed = R.ranks_[iota];
            std::vector<std::vector<Rat>> rows; // echelon store
            std::vector<std::vector<Exp>> chosen;
            std::vector<ChowClass> chosen_cls;
            for (const auto& e : cands) {
                if (static_cast<int>(chosen.size()) == rank_needed) break;
                ChowClass c = R.nef_monomial(e);
                std::vector<Rat> vec(basis.size());
                for (const auto& t : c.terms()) {
                    auto it = std::lower_bound(basis.begin(), basis.end(), t.e);
                    if (it == basis.end() || *it != t.e)
                        throw Error("chow: reduced class leaves the standard basis");
                    vec[static_cast<std::size_t>(it - basis.begin())] = Rat(t.c);
                }
                // eliminate against current rows
                auto v = vec;
                for (const auto& row : rows) {
                    std::size_t piv = 0;
                    while (piv < row.size() && row[piv].zero()) ++piv;
                    if (piv < v.size() && !v[piv].zero()) {
                        Rat f = v[piv] / row[piv];
                        for (std::size_t k = piv; k < v.size(); ++k)
                            v[k] = v[k] - f * row[k];
                    }
                }
                bool nonzero = std::any_of(v.begin(), v.end(), [](const Rat& r) { return !r.zero(); });
                if (nonzero) {
                    rows.push_back(std::move(v));
                    chosen.push_back(e);
                    chosen_cls.push_back(std::move(c));
                }
            }
            if (static_cast<int>(chosen.size()) != rank_needed) return at; // not viable
            // pairing matrix deg(omega_j * (zeta/omega_i))
            const int mu = rank_needed;
            std::vector<std::vector<long long>> M(mu, std::vector<long long>(mu));
            bool ortho = true;
            for (int i = 0; i < mu; ++i) {
                std::vector<Exp> comp(R.q_);
                for (int k = 0; k < R.q_; ++k)
                    comp[k] = static_cast<Exp>(zeta[k] - chosen[i][k]);
                ChowClass a = R.nef_monomial(comp);
                for (int j = 0; j < mu; ++j) {
                    M[i][j] = R.degree(chosen_cls[j] * a);
                    long long expect = i == j ? 1 : 0;
                    if (M[i][j] != expect) ortho = false;
                }
            }
            if (!ortho) {
                // the pairing must at least be invertible over Q
                std::vector<std::vector<long long>> W = M;
                int rank = 0;
                for (int col = 0; col < mu && rank < mu; ++col) {
                    int piv = -1;
                    for (int r2 = rank; r2 < mu; ++r2)
                        if (W[r2][col] != 0) { piv = r2; break; }
                    if (piv < 0) continue;
                    std::swap(W[rank], W[piv]);
                    for (int r2 = rank + 1; r2 < mu; ++r2) {
                        long long f1 = W[r2][col], f0 = W[rank][col];
                        for (int k2 = 0; k2 < mu; ++k2)
                            W[r2][k2] = narrow(static_cast<i128>(W[r2][k2]) * f0 -
                                                   static_cast<i128>(W[rank][k2]) * f1,
                                               "pairing elimination");
                    }
                    ++rank;
                }
                if (rank != mu) return at; // degenerate pairing: not viable
                at.orthogonal[iota] = 0;
            }
            at.omega[iota] = std::move(chosen);
            at.gram[iota] = std::move(M);
        }
        at.viable = true;
        at.fully_orthogonal =
            std::all_of(at.orthogonal.begin(), at.orthogonal.end(), [](char c) { return c != 0; });
        return at;
    };

    Attempt best;
    for (const auto& zeta : zeta_candidates) {
        Attempt at = try_zeta(zeta);
        if (!at.viable) continue;
        if (at.fully_orthogonal) { best = std::move(at); break; }
        if (!best.viable) best = std::move(at);
    }
    if (!best.viable)
        throw OrthogonalityFailureError(
            "no nef-monomial system with an invertible complementary pairing exists");
    R.zeta_ = best.zeta;
    R.omega_ = std::move(best.omega);
    R.gram_ = std::move(best.gram);
    R.orthogonal_ = std::move(best.orthogonal);
    return ring;
}

ChowClass ChowRing::make(std::vector<ChowClass::Term> nf) const {
    ChowClass c;
    c.ring_ = shared_from_this();
    c.terms_ = std::move(nf);
    return c;
}

ChowClass ChowRing::reduce_terms(std::vector<ChowClass::Term> raw) const {
    auto combined = zsort_combine(std::move(raw));
    // fast path: already in normal form
    bool nf = true;
    for (const auto& t : combined) {
        for (const auto& g : gb_->gb)
            if (zdivides(g[0].e, t.e)) { nf = false; break; }
        if (!nf) break;
    }
    if (nf) return make(std::move(combined));

    QPoly f;
    for (const auto& t : combined) f.push_back({t.e, Rat(t.c)});
    QPoly r = qp_normal_form(std::move(f), gb_->gb);
    std::vector<ChowClass::Term> out;
    for (const auto& t : r) {
        if (!t.c.integral())
            throw IntegralityViolationError("chow: non-integral normal form coefficient");
        out.push_back({t.e, t.c.num});
    }
    return make(zsort_combine(std::move(out)));
}

int ChowRing::rank(int codim) const {
    if (codim < 0 || codim > n_) return 0;
    return ranks_[codim];
}

ChowClass ChowRing::zero() const { return make({}); }

ChowClass ChowRing::one() const { return from_int(1); }

ChowClass ChowRing::from_int(long long c) const {
    if (c == 0) return zero();
    return make({ChowClass::Term{std::vector<Exp>(q_, 0), c}});
}

ChowClass ChowRing::var_class(int var) const {
    std::vector<ChowClass::Term> t = subst_.at(var);
    return reduce_terms(std::move(t));
}

ChowClass ChowRing::class_from_pic(const DegVec& d) const {
    if (static_cast<int>(d.size()) != q_) throw Error("class_from_pic: wrong length");
    std::vector<ChowClass::Term> t;
    for (int k = 0; k < q_; ++k) {
        if (d[k] == 0) continue;
        ChowClass::Term term;
        term.e.assign(q_, 0);
        term.e[k] = 1;
        term.c = d[k];
        t.push_back(std::move(term));
    }
    return reduce_terms(std::move(t));
}

ChowClass ChowRing::monomial_class(const std::vector<Exp>& e, long long c) const {
    return reduce_terms({ChowClass::Term{e, c}});
}

ChowClass ChowRing::nef_monomial(const std::vector<Exp>& e) const {
    ChowClass r = one();
    for (int k = 0; k < q_; ++k)
        if (e[k] > 0) r = r * class_from_pic(nef_[k]).pow(e[k]);
    return r;
}

ChowClass ChowRing::nef_class(int k) const { return class_from_pic(nef_.at(k)); }

ChowClass ChowRing::point_class() const {
    return make({ChowClass::Term{point_monomial_, point_sign_}});
}

long long ChowRing::degree(const ChowClass& c) const {
    return c.coeff_of(point_monomial_) * point_sign_;
}

ChowClass ChowRing::chern_tangent() const {
    ChowClass r = one();
    for (int j = 0; j < fan_.nrays(); ++j) {
        std::vector<ChowClass::Term> lin{ChowClass::Term{std::vector<Exp>(q_, 0), 1}};
        lin.insert(lin.end(), subst_[j].begin(), subst_[j].end());
        r = r * make(zsort_combine(std::move(lin)));
    }
    return r;
}

ChowClass ChowRing::invert_unit(const ChowClass& u) const {
    long long c0 = u.constant_term();
    if (c0 == -1) return -invert_unit(-u);
    if (c0 != 1) throw NotAUnitError("invert_unit: constant term is not +-1");
    ChowClass t = one() - u; // nilpotent
    ChowClass acc = one(), inv = one();
    for (int k = 1; k <= n_; ++k) {
        acc = acc * t;
        if (acc.is_zero()) break;
        inv = inv + acc;
    }
    return inv;
}

const std::vector<std::vector<Exp>>& ChowRing::omega(int iota) const { return omega_.at(iota); }

ChowClass ChowRing::omega_class(int iota, int i) const {
    return nef_monomial(omega_.at(iota).at(i));
}

std::vector<Exp> ChowRing::complementary_exponents(int iota, int i) const {
    const auto& w = omega_.at(iota).at(i);
    std::vector<Exp> comp(q_);
    for (int k = 0; k < q_; ++k) comp[k] = static_cast<Exp>(zeta_[k] - w[k]);
    return comp;
}

ChowClass ChowRing::complementary_class(int iota, int i) const {
    return nef_monomial(complementary_exponents(iota, i));
}

Ideal ChowRing::complementary_ideal(int iota, int i, SeededRng& rng) const {
    std::vector<Exp> j = complementary_exponents(iota, i);
    Ideal L(cox_);
    for (int k = 0; k < q_; ++k)
        for (Exp rep = 0; rep < j[k]; ++rep) L.add(random_form(nef_[k], cox_, rng));
    return L;
}

bool ChowRing::orthogonal(int iota) const { return orthogonal_.at(iota) != 0; }

bool ChowRing::orthogonal_everywhere() const {
    return std::all_of(orthogonal_.begin(), orthogonal_.end(), [](char c) { return c != 0; });
}

const std::vector<std::vector<long long>>& ChowRing::gram(int iota) const {
    return gram_.at(iota);
}

std::vector<long long> ChowRing::extract_gammas(int iota,
                                                const std::vector<long long>& counts) const {
    if (orthogonal(iota)) return counts;
    const auto& M = gram_.at(iota);
    const int mu = static_cast<int>(M.size());
    // exact rational solve of M * gamma = counts
    std::vector<std::vector<Rat>> A(mu, std::vector<Rat>(mu + 1));
    for (int i = 0; i < mu; ++i) {
        for (int j = 0; j < mu; ++j) A[i][j] = Rat(M[i][j]);
        A[i][mu] = Rat(counts[i]);
    }
    for (int col = 0; col < mu; ++col) {
        int piv = -1;
        for (int r = col; r < mu; ++r)
            if (!A[r][col].zero()) { piv = r; break; }
        if (piv < 0)
            throw OrthogonalityFailureError("complementary pairing is singular");
        std::swap(A[col], A[piv]);
        for (int r = 0; r < mu; ++r) {
            if (r == col || A[r][col].zero()) continue;
            Rat f = A[r][col] / A[col][col];
            for (int k = col; k <= mu; ++k) A[r][k] = A[r][k] - f * A[col][k];
        }
    }
    std::vector<long long> gamma(mu);
    for (int i = 0; i < mu; ++i) {
        Rat v = A[i][mu] / A[i][i];
        if (!v.integral())
            throw OrthogonalityFailureError("projective degrees not integral under the pairing");
        gamma[i] = v.num;
    }
    return gamma;
}

// ---------------------------------------------------------------------------
// parsing and rendering

namespace {

struct ClassParser {
    const std::string& s;
    std::size_t pos = 0;
    const ChowRing& ring;
    ChowRingPtr handle;

    ClassParser(const std::string& text, const ChowRing& r, ChowRingPtr h)
        : s(text), ring(r), handle(std::move(h)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool eat_minus() {
        skip_ws();
        if (pos < s.size() && s[pos] == '-') { ++pos; return true; }
        if (pos + 2 < s.size() && static_cast<unsigned char>(s[pos]) == 0xE2 &&
            static_cast<unsigned char>(s[pos + 1]) == 0x88 &&
            static_cast<unsigned char>(s[pos + 2]) == 0x92) {
            pos += 3;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("class parse error at position " + std::to_string(pos) + ": " + what);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    ChowClass expr() {
        bool neg = eat_minus();
        if (!neg) eat('+');
        ChowClass acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat_minus()) acc = acc - term();
            else break;
        }
        return acc;
    }

    ChowClass term() {
        ChowClass acc = factor();
        while (true) {
            skip_ws();
            if (eat('*')) acc = acc * factor();
            else break;
        }
        return acc;
    }

    ChowClass factor() {
        ChowClass b = base();
        skip_ws();
        if (eat('^')) {
            long long e = integer();
            if (e < 0 || e > 1000) fail("exponent out of range");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    ChowClass base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            ChowClass e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat_minus()) return -base();
        if (std::isdigit(static_cast<unsigned char>(c))) return ring.from_int(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (int k = 0; k < ring.q(); ++k)
                if (ring.names()[k] == name) {
                    std::vector<Exp> e(ring.q(), 0);
                    e[k] = 1;
                    return ring.monomial_class(e);
                }
            int v = ring.cox()->var_index(name);
            if (v >= 0) return ring.var_class(v);
            fail("unknown class symbol '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

ChowClass ChowRing::parse_class(const std::string& text) const {
    ClassParser p(text, *this, shared_from_this());
    ChowClass r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::string ChowRing::render(const ChowClass& c) const {
    if (c.is_zero()) return "0";
    // display order: descending total degree, lexicographically descending
    std::vector<ChowClass::Term> ts = c.terms();
    std::sort(ts.begin(), ts.end(), [](const ChowClass::Term& a, const ChowClass::Term& b) {
        int da = 0, db = 0;
        for (auto v : a.e) da += v;
        for (auto v : b.e) db += v;
        if (da != db) return da > db;
        return a.e > b.e;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : ts) {
        long long coeff = t.c;
        if (first) {
            if (coeff < 0) { os << "-"; coeff = -coeff; }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        int deg = 0;
        for (auto v : t.e) deg += v;
        bool wrote = false;
        if (coeff != 1 || deg == 0) {
            os << coeff;
            wrote = true;
        }
        for (int k = 0; k < q_; ++k) {
            if (t.e[k] == 0) continue;
            if (wrote) os << "*";
            os << names_[k];
            if (t.e[k] > 1) os << "^" << static_cast<int>(t.e[k]);
            wrote = true;
        }
    }
    return os.str();
}

} // namespace toricchar
