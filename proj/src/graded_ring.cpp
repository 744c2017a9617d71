#include "toricchar/graded_ring.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace toricchar {

std::shared_ptr<const GradedRing>
GradedRing::make(std::vector<std::string> names, std::vector<DegVec> degrees, PrimeField field) {
    if (names.size() != degrees.size())
        throw Error("GradedRing: names/degrees size mismatch");
    if (names.empty()) throw Error("GradedRing: no variables");
    if (names.size() > 64) throw Error("GradedRing: too many variables");

    auto r = std::shared_ptr<GradedRing>(new GradedRing());
    r->names_ = std::move(names);
    r->degrees_ = std::move(degrees);
    r->field_ = field;
    r->q_ = static_cast<int>(r->degrees_.front().size());
    r->aux_.assign(r->names_.size(), 0);
    for (const auto& d : r->degrees_)
        if (static_cast<int>(d.size()) != r->q_)
            throw Error("GradedRing: inconsistent degree lengths");
    for (std::size_t i = 0; i < r->names_.size(); ++i)
        for (std::size_t j = i + 1; j < r->names_.size(); ++j)
            if (r->names_[i] == r->names_[j])
                throw Error("GradedRing: duplicate variable name " + r->names_[i]);
    r->compute_positive_functional();
    return r;
}

int GradedRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

DegVec GradedRing::degree_of_exponents(const Exp* e) const {
    DegVec d(q_, 0);
    for (int i = 0; i < nvars(); ++i) {
        if (e[i] == 0) continue;
        if (aux_[i])
            throw NotHomogeneousError("degree of a monomial containing the auxiliary variable " + names_[i]);
        for (int k = 0; k < q_; ++k) d[k] += static_cast<long long>(e[i]) * degrees_[i][k];
    }
    return d;
}

void GradedRing::compute_positive_functional() {
    // integer y with <y, deg(x_i)> >= 1 for every graded variable; exists
    // because the graded pieces of the Cox ring of a complete toric variety
    // are finite dimensional (the degree cone is pointed)
    std::vector<int> graded;
    for (int i = 0; i < nvars(); ++i)
        if (!aux_[i]) graded.push_back(i);
    if (graded.empty()) { posfun_.assign(q_, 0); return; }

    auto feasible = [&](const DegVec& y) {
        for (int i : graded) {
            long long s = 0;
            for (int k = 0; k < q_; ++k) s += y[k] * degrees_[i][k];
            if (s < 1) return false;
        }
        return true;
    };

    int maxK = q_ <= 3 ? 32 : (q_ <= 5 ? 10 : 5);
    for (int K = 1; K <= maxK; ++K) {
        DegVec y(q_, -K);
        while (true) {
            if (feasible(y)) { posfun_ = y; return; }
            int k = 0;
            while (k < q_ && y[k] == K) y[k++] = -K;
            if (k == q_) break;
            ++y[k];
        }
    }
    throw Error("GradedRing: no positive grading functional found (grading cone not pointed?)");
}

std::vector<std::vector<Exp>> GradedRing::monomials_of_degree(const DegVec& beta) const {
    if (static_cast<int>(beta.size()) != q_)
        throw Error("monomials_of_degree: degree vector has wrong length");
    std::vector<std::vector<Exp>> out;
    const int m = nvars();

    long long budget = 0;
    for (int k = 0; k < q_; ++k) budget += posfun_[k] * beta[k];
    if (budget < 0) return out;

    std::vector<int> graded;
    for (int i = 0; i < m; ++i)
        if (!aux_[i]) graded.push_back(i);

    std::vector<Exp> cur(m, 0);
    DegVec rem = beta;

    // weight of each graded variable under the positive functional
    std::vector<long long> w(graded.size());
    for (std::size_t g = 0; g < graded.size(); ++g) {
        long long s = 0;
        for (int k = 0; k < q_; ++k) s += posfun_[k] * degrees_[graded[g]][k];
        w[g] = s; // >= 1
    }

    std::function<void(std::size_t, long long)> rec = [&](std::size_t g, long long left) {
        if (g == graded.size()) {
            bool zero = std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; });
            if (zero) out.push_back(cur);
            return;
        }
        int var = graded[g];
        // try exponents 0,1,... while the positivity budget allows
        for (Exp e = 0;; ++e) {
            long long used = static_cast<long long>(e) * w[g];
            if (used > left) break;
            if (e > 0)
                for (int k = 0; k < q_; ++k) rem[k] -= degrees_[var][k];
            cur[var] = e;
            rec(g + 1, left - used);
            if (e == std::numeric_limits<Exp>::max()) break;
        }
        // restore
        Exp last = cur[var];
        for (int k = 0; k < q_; ++k) rem[k] += static_cast<long long>(last) * degrees_[var][k];
        cur[var] = 0;
    };
    rec(0, budget);
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const GradedRing> GradedRing::with_suffix_var(const std::string& name) const {
    auto r = std::shared_ptr<GradedRing>(new GradedRing(*this));
    r->names_.push_back(name);
    r->degrees_.push_back(DegVec(q_, 0));
    r->aux_.push_back(1);
    if (r->names_.size() > 64) throw Error("GradedRing: too many variables");
    return r;
}

std::shared_ptr<const GradedRing> GradedRing::with_prefix_var(const std::string& name) const {
    auto r = std::shared_ptr<GradedRing>(new GradedRing(*this));
    r->names_.insert(r->names_.begin(), name);
    r->degrees_.insert(r->degrees_.begin(), DegVec(q_, 0));
    r->aux_.insert(r->aux_.begin(), 1);
    if (r->names_.size() > 64) throw Error("GradedRing: too many variables");
    return r;
}

} // namespace toricchar
