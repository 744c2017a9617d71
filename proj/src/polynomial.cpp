#include "toricchar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>

namespace toricchar {

int cmp_degrevlex(const Exp* a, const Exp* b, int n) {
    long long da = 0, db = 0;
    for (int i = 0; i < n; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1; // larger late exponent = smaller
    }
    return 0;
}

namespace {
std::uint32_t exp_sum(const Exp* e, int n) {
    std::uint32_t s = 0;
    for (int i = 0; i < n; ++i) s += e[i];
    return s;
}
} // namespace

Polynomial Polynomial::constant(RingPtr ring, long long c) {
    Polynomial p(std::move(ring));
    std::uint32_t cc = p.ring_->field().reduce_int(c);
    if (cc != 0) {
        p.exps_.assign(p.nvars(), 0);
        p.coeffs_.push_back(cc);
        p.tdeg_.push_back(0);
    }
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
    Polynomial p(std::move(ring));
    std::vector<Exp> e(p.nvars(), 0);
    e[var] = 1;
    return monomial(p.ring_, e, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const std::vector<Exp>& exps, long long c) {
    Polynomial p(std::move(ring));
    std::uint32_t cc = p.ring_->field().reduce_int(c);
    if (cc != 0) {
        p.exps_ = exps;
        p.coeffs_.push_back(cc);
        p.tdeg_.push_back(exp_sum(exps.data(), p.nvars()));
    }
    return p;
}

std::uint32_t Polynomial::max_total_degree() const {
    return tdeg_.empty() ? 0 : tdeg_.front();
}

void Polynomial::push_term(const std::vector<Exp>& e, std::uint32_t c) {
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(c);
    tdeg_.push_back(exp_sum(e.data(), nvars()));
}

void Polynomial::finalize() {
    const int n = nvars();
    const int nt = nterms();
    std::vector<int> idx(nt);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return cmp_degrevlex(exps(a), exps(b), n) > 0;
    });
    std::vector<Exp> ne;
    ne.reserve(exps_.size());
    std::vector<std::uint32_t> nc, nd;
    const PrimeField& F = ring_->field();
    for (int t : idx) {
        if (!nc.empty() && cmp_degrevlex(ne.data() + (nc.size() - 1) * n, exps(t), n) == 0) {
            std::uint32_t s = F.add(nc.back(), coeffs_[t]);
            if (s == 0) {
                nc.pop_back();
                nd.pop_back();
                ne.resize(ne.size() - n);
            } else {
                nc.back() = s;
            }
        } else if (coeffs_[t] != 0) {
            ne.insert(ne.end(), exps(t), exps(t) + n);
            nc.push_back(coeffs_[t]);
            nd.push_back(tdeg_[t]);
        }
    }
    exps_ = std::move(ne);
    coeffs_ = std::move(nc);
    tdeg_ = std::move(nd);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) throw Error("polynomial +: ring mismatch");
    const int n = nvars();
    const PrimeField& F = ring_->field();
    Polynomial r(ring_);
    r.exps_.reserve(exps_.size() + o.exps_.size());
    r.coeffs_.reserve(coeffs_.size() + o.coeffs_.size());
    int i = 0, j = 0;
    while (i < nterms() || j < o.nterms()) {
        int c;
        if (i == nterms()) c = -1;
        else if (j == o.nterms()) c = 1;
        else c = cmp_degrevlex(exps(i), o.exps(j), n);
        if (c > 0) {
            r.exps_.insert(r.exps_.end(), exps(i), exps(i) + n);
            r.coeffs_.push_back(coeffs_[i]);
            r.tdeg_.push_back(tdeg_[i]);
            ++i;
        } else if (c < 0) {
            r.exps_.insert(r.exps_.end(), o.exps(j), o.exps(j) + n);
            r.coeffs_.push_back(o.coeffs_[j]);
            r.tdeg_.push_back(o.tdeg_[j]);
            ++j;
        } else {
            std::uint32_t s = F.add(coeffs_[i], o.coeffs_[j]);
            if (s != 0) {
                r.exps_.insert(r.exps_.end(), exps(i), exps(i) + n);
                r.coeffs_.push_back(s);
                r.tdeg_.push_back(tdeg_[i]);
            }
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    const PrimeField& F = ring_->field();
    for (auto& c : r.coeffs_) c = F.neg(c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const PrimeField& F = ring_->field();
    c %= F.p();
    if (c == 0) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& x : r.coeffs_) x = F.mul(x, c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) throw Error("polynomial *: ring mismatch");
    const int n = nvars();
    Polynomial r(ring_);
    if (is_zero() || o.is_zero()) return r;
    const PrimeField& F = ring_->field();

    // emit all products, sort, combine
    std::size_t total = static_cast<std::size_t>(nterms()) * o.nterms();
    std::vector<Exp> pe(total * n);
    std::vector<std::uint64_t> pc(total);
    std::size_t t = 0;
    for (int i = 0; i < nterms(); ++i) {
        for (int j = 0; j < o.nterms(); ++j, ++t) {
            Exp* dst = pe.data() + t * n;
            const Exp* a = exps(i);
            const Exp* b = o.exps(j);
            for (int k = 0; k < n; ++k) dst[k] = static_cast<Exp>(a[k] + b[k]);
            pc[t] = static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j] % F.p();
        }
    }
    std::vector<std::uint32_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return cmp_degrevlex(pe.data() + static_cast<std::size_t>(a) * n,
                             pe.data() + static_cast<std::size_t>(b) * n, n) > 0;
    });
    for (std::uint32_t id : idx) {
        const Exp* e = pe.data() + static_cast<std::size_t>(id) * n;
        if (!r.coeffs_.empty() &&
            cmp_degrevlex(r.exps_.data() + (r.coeffs_.size() - 1) * n, e, n) == 0) {
            std::uint32_t s = F.add(r.coeffs_.back(), static_cast<std::uint32_t>(pc[id]));
            if (s == 0) {
                r.coeffs_.pop_back();
                r.tdeg_.pop_back();
                r.exps_.resize(r.exps_.size() - n);
            } else {
                r.coeffs_.back() = s;
            }
        } else if (pc[id] != 0) {
            r.exps_.insert(r.exps_.end(), e, e + n);
            r.coeffs_.push_back(static_cast<std::uint32_t>(pc[id]));
            r.tdeg_.push_back(exp_sum(e, n));
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, 1);
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return ring_->same_ring(*o.ring_) && exps_ == o.exps_ && coeffs_ == o.coeffs_;
}

Polynomial Polynomial::derivative(int var) const {
    const int n = nvars();
    const PrimeField& F = ring_->field();
    Polynomial r(ring_);
    for (int t = 0; t < nterms(); ++t) {
        const Exp* e = exps(t);
        if (e[var] == 0) continue;
        std::uint32_t c = F.mul(coeffs_[t], e[var] % F.p());
        if (c == 0) continue;
        std::vector<Exp> ne(e, e + n);
        --ne[var];
        r.push_term(ne, c);
    }
    r.finalize();
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& g) const {
    const int n = nvars();
    Polynomial out(ring_);
    std::vector<Polynomial> gpow{constant(ring_, 1)};
    for (int t = 0; t < nterms(); ++t) {
        const Exp* e = exps(t);
        Exp k = e[var];
        while (static_cast<Exp>(gpow.size()) <= k) gpow.push_back(gpow.back() * g);
        std::vector<Exp> rest(e, e + n);
        rest[var] = 0;
        out = out + Polynomial::monomial(ring_, rest, 1).scaled(coeffs_[t]) * gpow[k];
    }
    return out;
}

Polynomial Polynomial::mapped(RingPtr target, const std::vector<int>& var_map) const {
    const int n = nvars();
    const int nn = target->nvars();
    Polynomial r(target);
    std::vector<Exp> e(nn);
    for (int t = 0; t < nterms(); ++t) {
        std::fill(e.begin(), e.end(), 0);
        const Exp* src = exps(t);
        for (int i = 0; i < n; ++i) e[var_map[i]] = src[i];
        r.push_term(e, coeffs_[t]);
    }
    r.finalize();
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    DegVec d0 = ring_->degree_of_exponents(exps(0));
    for (int t = 1; t < nterms(); ++t)
        if (ring_->degree_of_exponents(exps(t)) != d0) return false;
    return true;
}

DegVec Polynomial::multidegree() const {
    if (is_zero()) throw ZeroPolynomialError("multidegree of the zero polynomial");
    DegVec d0 = ring_->degree_of_exponents(exps(0));
    for (int t = 1; t < nterms(); ++t)
        if (ring_->degree_of_exponents(exps(t)) != d0)
            throw NotHomogeneousError("polynomial is not homogeneous: " + render());
    return d0;
}

std::string Polynomial::render() const {
    if (is_zero()) return "0";
    const int n = nvars();
    std::ostringstream os;
    for (int t = 0; t < nterms(); ++t) {
        if (t > 0) os << " + ";
        const Exp* e = exps(t);
        bool constant_term = tdeg_[t] == 0;
        bool first = true;
        if (coeffs_[t] != 1 || constant_term) {
            os << coeffs_[t];
            first = false;
        }
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (!first) os << "*";
            os << ring_->name(i);
            if (e[i] > 1) os << "^" << e[i];
            first = false;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    RingPtr ring;

    explicit Parser(const std::string& text, RingPtr r) : s(text), ring(std::move(r)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    // the U+2212 minus sign is accepted as '-'
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
        throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        long long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > (1LL << 62)) fail("integer literal too large");
        }
        return v;
    }

    Polynomial expr() {
        bool neg = false;
        skip_ws();
        if (eat_minus()) neg = true;
        else if (eat('+')) {}
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat_minus()) acc = acc - term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (eat('*')) acc = acc * factor();
            else break;
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (eat('^')) {
            long long e = integer();
            if (e < 0 || e > 30000) fail("exponent out of range");
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (eat_minus()) return -base();
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring, integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int v = ring->var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring, v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, RingPtr ring) {
    Parser p(text, std::move(ring));
    Polynomial r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Polynomial random_form(const DegVec& beta, RingPtr ring, SeededRng& rng) {
    auto monos = ring->monomials_of_degree(beta);
    if (monos.empty()) {
        std::string b;
        for (auto v : beta) b += (b.empty() ? "" : ",") + std::to_string(v);
        throw EmptyDegreeError("no monomial of degree (" + b + ") in this ring");
    }
    const PrimeField& F = ring->field();
    Polynomial r(ring);
    for (const auto& e : monos) r.push_term(e, F.random_nonzero(rng));
    r.finalize();
    return r;
}

} // namespace toricchar
