#include "toricchar/fan.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace toricchar {

namespace {

using i128 = __int128;

long long det_bareiss(std::vector<std::vector<long long>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    i128 prev = 1;
    std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    int sign = 1;
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
    i128 d = m[n - 1][n - 1];
    long long res = static_cast<long long>(d);
    if (static_cast<i128>(res) != d) throw OverflowError("determinant overflow");
    return sign > 0 ? res : -res;
}

/// solve A x = b for unimodular integer A (|det| = 1) by Cramer's rule
std::vector<long long> solve_unimodular(const std::vector<std::vector<long long>>& A,
                                        const std::vector<long long>& b) {
    const int n = static_cast<int>(A.size());
    long long d = det_bareiss(A);
    if (d != 1 && d != -1)
        throw TorsionClassGroupError("cone generator matrix is not unimodular");
    std::vector<long long> x(n);
    for (int k = 0; k < n; ++k) {
        auto Ak = A;
        for (int i = 0; i < n; ++i) Ak[i][k] = b[i];
        x[k] = det_bareiss(Ak) * d; // 1/d == d for d = +-1
    }
    return x;
}

long long vdot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// construction

Fan Fan::product_of_projective_spaces(const std::vector<int>& dims) {
    Fan fan;
    for (int d : dims) {
        if (d < 1) throw FanValidationError("projective factor dimension must be >= 1");
        fan.dim += d;
    }
    const int j = static_cast<int>(dims.size());
    static const char* letters = "xyzwuvabcdefg";
    if (j > 13) throw FanValidationError("too many product factors");

    int coord = 0;
    std::vector<std::vector<int>> factor_vars;
    for (int f = 0; f < j; ++f) {
        int d = dims[f];
        std::vector<int> vars;
        for (int i = 0; i <= d; ++i) {
            std::vector<long long> ray(fan.dim, 0);
            if (i == 0) {
                for (int k = 0; k < d; ++k) ray[coord + k] = -1;
            } else {
                ray[coord + i - 1] = 1;
            }
            vars.push_back(fan.nrays());
            fan.rays.push_back(std::move(ray));
            fan.var_names.push_back(std::string(1, letters[f]) + std::to_string(i));
        }
        factor_vars.push_back(std::move(vars));
        coord += d;
    }
    // maximal cones: one omitted ray per factor, first factor slowest
    std::vector<int> omit(j, 0);
    while (true) {
        std::vector<int> cone;
        for (int f = 0; f < j; ++f)
            for (int i = 0; i <= dims[f]; ++i)
                if (i != omit[f]) cone.push_back(factor_vars[f][i]);
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
        int f = j - 1;
        while (f >= 0 && omit[f] == dims[f]) omit[f--] = 0;
        if (f < 0) break;
        ++omit[f];
    }
    fan.factor_dims = dims;
    return fan;
}

Fan Fan::from_shorthand(const std::string& text) {
    std::vector<int> dims;
    std::size_t pos = 0;
    auto fail = [&]() {
        throw ParseError("bad space shorthand '" + text + "' (expected e.g. \"P4xP2\")");
    };
    while (pos < text.size()) {
        if (std::tolower(static_cast<unsigned char>(text[pos])) != 'p') fail();
        ++pos;
        if (pos < text.size() && text[pos] == '^') ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail();
        dims.push_back(std::stoi(text.substr(start, pos - start)));
        if (pos == text.size()) break;
        char sep = text[pos];
        if (sep != 'x' && sep != 'X' && sep != '*') fail();
        ++pos;
    }
    if (dims.empty()) fail();
    return product_of_projective_spaces(dims);
}

Fan Fan::from_json_text(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("fan JSON: ") + e.what());
    }
    Fan fan;
    if (!j.contains("rays") || !j.contains("max_cones"))
        throw ParseError("fan JSON: need \"rays\" and \"max_cones\"");
    for (const auto& r : j["rays"]) fan.rays.push_back(r.get<std::vector<long long>>());
    for (const auto& c : j["max_cones"]) {
        auto cone = c.get<std::vector<int>>();
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    if (fan.rays.empty()) throw ParseError("fan JSON: no rays");
    fan.dim = static_cast<int>(fan.rays.front().size());
    if (j.contains("var_names"))
        fan.var_names = j["var_names"].get<std::vector<std::string>>();
    else
        for (int i = 0; i < fan.nrays(); ++i) fan.var_names.push_back("x" + std::to_string(i));
    if (static_cast<int>(fan.var_names.size()) != fan.nrays())
        throw ParseError("fan JSON: var_names length mismatch");
    return fan;
}

Fan Fan::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fan file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Fan::to_json_text() const {
    nlohmann::ordered_json j;
    j["rays"] = rays;
    j["max_cones"] = max_cones;
    j["var_names"] = var_names;
    return j.dump();
}

// ---------------------------------------------------------------------------
// validation

FanValidation validate(const Fan& fan) {
    const int n = fan.dim;
    const int m = fan.nrays();
    if (m == 0) throw FanValidationError("fan has no rays");
    for (const auto& r : fan.rays)
        if (static_cast<int>(r.size()) != n)
            throw FanValidationError("ray has wrong dimension");
    for (int i = 0; i < m; ++i) {
        long long g = 0;
        for (long long v : fan.rays[i]) g = std::gcd(g, std::abs(v));
        if (g == 0) throw FanValidationError("NonPrimitiveRay: ray " + std::to_string(i) + " is zero");
        if (g != 1)
            throw FanValidationError("NonPrimitiveRay: ray " + std::to_string(i) +
                                     " has content " + std::to_string(g));
        for (int j = i + 1; j < m; ++j)
            if (fan.rays[i] == fan.rays[j])
                throw FanValidationError("DuplicateRay: rays " + std::to_string(i) + " and " +
                                         std::to_string(j) + " coincide");
    }

    FanValidation rep;
    rep.simplicial = true;
    rep.smooth = true;
    rep.complete = true;

    std::vector<char> used(m, 0);
    for (const auto& cone : fan.max_cones) {
        for (int idx : cone) {
            if (idx < 0 || idx >= m) throw FanValidationError("cone ray index out of range");
            used[idx] = 1;
        }
        if (static_cast<int>(cone.size()) != n) {
            rep.simplicial = false;
            rep.smooth = false;
            rep.complete = false;
            rep.notes.push_back("maximal cone with " + std::to_string(cone.size()) +
                                " rays in a dimension-" + std::to_string(n) + " fan");
            continue;
        }
        std::vector<std::vector<long long>> mat;
        for (int idx : cone) mat.push_back(fan.rays[idx]);
        long long d = det_bareiss(mat);
        if (d == 0) {
            rep.simplicial = false;
            rep.smooth = false;
            rep.notes.push_back("degenerate maximal cone");
        } else if (d != 1 && d != -1) {
            rep.smooth = false;
            rep.notes.push_back("maximal cone with generator determinant " + std::to_string(d));
        }
    }
    for (int i = 0; i < m; ++i)
        if (!used[i]) {
            rep.complete = false;
            rep.notes.push_back("ray " + std::to_string(i) + " lies in no maximal cone");
        }

    // walls: every facet shared by exactly two maximal cones, adjacency connected
    if (rep.simplicial && !fan.max_cones.empty()) {
        std::map<std::vector<int>, std::vector<int>> walls;
        for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
            const auto& cone = fan.max_cones[c];
            for (std::size_t drop = 0; drop < cone.size(); ++drop) {
                std::vector<int> facet;
                for (std::size_t k = 0; k < cone.size(); ++k)
                    if (k != drop) facet.push_back(cone[k]);
                walls[facet].push_back(static_cast<int>(c));
            }
        }
        std::vector<std::vector<int>> adj(fan.max_cones.size());
        for (const auto& [facet, cones] : walls) {
            if (cones.size() != 2) {
                rep.complete = false;
                rep.notes.push_back("wall shared by " + std::to_string(cones.size()) +
                                    " maximal cones");
            } else {
                adj[cones[0]].push_back(cones[1]);
                adj[cones[1]].push_back(cones[0]);
            }
        }
        std::vector<char> seen(fan.max_cones.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int o : adj[c])
                if (!seen[o]) {
                    seen[o] = 1;
                    stack.push_back(o);
                }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
            rep.complete = false;
            rep.notes.push_back("maximal-cone adjacency graph is disconnected");
        }
    }
    return rep;
}

void require_valid(const Fan& fan) {
    FanValidation rep = validate(fan);
    if (!rep.ok()) {
        std::string why;
        for (const auto& s : rep.notes) why += (why.empty() ? "" : "; ") + s;
        if (why.empty()) why = "fan is not smooth and complete";
        throw FanValidationError(why);
    }
}

// ---------------------------------------------------------------------------
// combinatorics

std::vector<std::vector<int>> primitive_collections(const Fan& fan) {
    const int m = fan.nrays();
    if (m > 26) throw Error("primitive_collections: too many rays for subset search");
    std::vector<std::uint64_t> cones;
    for (const auto& c : fan.max_cones) {
        std::uint64_t b = 0;
        for (int i : c) b |= std::uint64_t{1} << i;
        cones.push_back(b);
    }
    auto is_face = [&](std::uint64_t s) {
        for (auto c : cones)
            if ((s & ~c) == 0) return true;
        return false;
    };

    std::vector<std::uint64_t> found;
    std::vector<std::vector<int>> out;
    std::vector<int> comb;
    // sizes from 2 up: singletons of a complete fan are always faces
    for (int size = 2; size <= m; ++size) {
        comb.assign(size, 0);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::uint64_t s = 0;
            for (int i : comb) s |= std::uint64_t{1} << i;
            bool skip = false;
            for (auto f : found)
                if ((f & ~s) == 0) { skip = true; break; }
            if (!skip && !is_face(s)) {
                bool minimal = true;
                for (int i : comb)
                    if (!is_face(s & ~(std::uint64_t{1} << i))) { minimal = false; break; }
                if (minimal) {
                    found.push_back(s);
                    out.push_back(comb);
                }
            }
            // next combination
            int k = size - 1;
            while (k >= 0 && comb[k] == m - size + k) --k;
            if (k < 0) break;
            ++comb[k];
            for (int t = k + 1; t < size; ++t) comb[t] = comb[t - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool affine_codim_condition(const Fan& fan) {
    return static_cast<int>(primitive_collections(fan).size()) == fan.nrays() - fan.dim;
}

std::vector<std::vector<Exp>> stanley_reisner_monomials(const Fan& fan) {
    std::vector<std::vector<Exp>> out;
    for (const auto& pc : primitive_collections(fan)) {
        std::vector<Exp> e(fan.nrays(), 0);
        for (int i : pc) e[i] = 1;
        out.push_back(std::move(e));
    }
    return out;
}

ClassGroupGrading class_group_grading(const Fan& fan) {
    const int n = fan.dim;
    const int m = fan.nrays();
    ClassGroupGrading g;
    g.q = m - n;
    if (g.q <= 0) throw FanValidationError("fan must have more rays than its dimension");

    const auto& sigma0 = fan.max_cones.at(0);
    std::vector<char> inside(m, 0);
    for (int i : sigma0) inside[i] = 1;
    for (int i = 0; i < m; ++i)
        if (!inside[i]) g.basis_vars.push_back(i);

    // relations sum_j <e_l, v_j> x_j for the standard dual basis
    g.relations.assign(n, std::vector<long long>(m, 0));
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < m; ++j) g.relations[l][j] = fan.rays[j][l];

    // identity grading outside sigma0; solve the relations for the rest
    g.degrees.assign(m, DegVec(g.q, 0));
    for (int k = 0; k < g.q; ++k) g.degrees[g.basis_vars[k]][k] = 1;

    std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
    for (int l = 0; l < n; ++l)
        for (int pos = 0; pos < n; ++pos) A[l][pos] = fan.rays[sigma0[pos]][l];
    for (int k = 0; k < g.q; ++k) {
        std::vector<long long> rhs(n, 0);
        for (int l = 0; l < n; ++l) rhs[l] = -fan.rays[g.basis_vars[k]][l];
        std::vector<long long> x = solve_unimodular(A, rhs);
        for (int pos = 0; pos < n; ++pos) g.degrees[sigma0[pos]][k] = x[pos];
    }

    // defensive: the relations must annihilate the degree matrix
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < g.q; ++k) {
            long long s = 0;
            for (int j = 0; j < m; ++j) s += g.relations[l][j] * g.degrees[j][k];
            if (s != 0) throw TorsionClassGroupError("grading does not satisfy the ray relations");
        }
    return g;
}

bool is_nef(const DegVec& cls, const Fan& fan) {
    ClassGroupGrading g = class_group_grading(fan);
    if (static_cast<int>(cls.size()) != g.q) throw Error("is_nef: class has wrong length");
    const int n = fan.dim;
    const int m = fan.nrays();
    // torus-invariant representative supported outside sigma0
    std::vector<long long> a(m, 0);
    for (int k = 0; k < g.q; ++k) a[g.basis_vars[k]] = cls[k];

    for (const auto& cone : fan.max_cones) {
        std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
        std::vector<long long> rhs(n);
        for (int pos = 0; pos < n; ++pos) {
            for (int l = 0; l < n; ++l) A[pos][l] = fan.rays[cone[pos]][l];
            rhs[pos] = -a[cone[pos]];
        }
        std::vector<long long> msigma = solve_unimodular(A, rhs);
        for (int j = 0; j < m; ++j) {
            if (vdot(msigma, fan.rays[j]) < -a[j]) return false;
        }
    }
    return true;
}

std::vector<DegVec> nef_basis(const Fan& fan) {
    ClassGroupGrading g = class_group_grading(fan);
    const int q = g.q;

    for (int bound = 3; bound <= 9; bound += 3) {
        // candidate nef classes in the box, small and then lex-descending
        std::vector<DegVec> cand;
        DegVec c(q, -bound);
        while (true) {
            bool zero = std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
            if (!zero && is_nef(c, fan)) cand.push_back(c);
            int k = 0;
            while (k < q && c[k] == bound) c[k++] = -bound;
            if (k == q) break;
            ++c[k];
        }
        std::sort(cand.begin(), cand.end(), [](const DegVec& a, const DegVec& b) {
            long long sa = 0, sb = 0;
            for (auto v : a) sa += std::abs(v);
            for (auto v : b) sb += std::abs(v);
            if (sa != sb) return sa < sb;
            return a > b; // lex-descending puts (1,0,..) before (0,..,1)
        });

        // depth-first search for a unimodular subset, greedy-first
        std::vector<int> chosen;
        std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == q) {
                std::vector<std::vector<long long>> M(q, std::vector<long long>(q));
                for (int r = 0; r < q; ++r)
                    for (int k = 0; k < q; ++k) M[r][k] = cand[chosen[r]][k];
                long long d = det_bareiss(M);
                return d == 1 || d == -1;
            }
            for (std::size_t i = from; i < cand.size(); ++i) {
                // rank must increase: test via a small rational elimination
                chosen.push_back(static_cast<int>(i));
                std::vector<std::vector<long long>> M;
                for (int idx : chosen) M.push_back(cand[idx]);
                bool indep;
                {
                    // fraction-free row echelon rank
                    auto R = M;
                    int rank = 0;
                    for (int col = 0; col < q && rank < static_cast<int>(R.size()); ++col) {
                        int piv = -1;
                        for (int r = rank; r < static_cast<int>(R.size()); ++r)
                            if (R[r][col] != 0) { piv = r; break; }
                        if (piv < 0) continue;
                        std::swap(R[rank], R[piv]);
                        for (int r = rank + 1; r < static_cast<int>(R.size()); ++r) {
                            long long f1 = R[r][col], f0 = R[rank][col];
                            for (int k2 = 0; k2 < q; ++k2)
                                R[r][k2] = R[r][k2] * f0 - R[rank][k2] * f1;
                        }
                        ++rank;
                    }
                    indep = rank == static_cast<int>(R.size());
                }
                if (indep && dfs(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (dfs(0)) {
            std::vector<DegVec> basis;
            for (int idx : chosen) basis.push_back(cand[idx]);
            return basis;
        }
    }
    throw NefBasisNotFoundError("no unimodular nef basis found in the search box");
}

std::vector<std::vector<Exp>> irrelevant_monomials(const Fan& fan) {
    std::vector<std::vector<Exp>> out;
    for (const auto& cone : fan.max_cones) {
        std::vector<Exp> e(fan.nrays(), 1);
        for (int i : cone) e[i] = 0;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RingPtr cox_ring(const Fan& fan, const PrimeField& field) {
    ClassGroupGrading g = class_group_grading(fan);
    return GradedRing::make(fan.var_names, g.degrees, field);
}

Ideal irrelevant_ideal(const Fan& fan, const RingPtr& ring) {
    Ideal B(ring);
    for (const auto& e : irrelevant_monomials(fan)) B.add(Polynomial::monomial(ring, e, 1));
    return B;
}

Ideal dehomogenizing_ideal(const Fan& fan, const RingPtr& ring, SeededRng& rng) {
    if (!affine_codim_condition(fan))
        throw ConditionFailedError(
            "affine codimension condition fails: primitive collections != rays - dim");
    const PrimeField& F = ring->field();
    Ideal L(ring);
    for (const auto& pc : primitive_collections(fan)) {
        Polynomial f = Polynomial::constant(ring, -1);
        for (int i : pc)
            f = f + Polynomial::variable(ring, i).scaled(F.random_nonzero(rng));
        L.add(std::move(f));
    }
    return L;
}

} // namespace toricchar
