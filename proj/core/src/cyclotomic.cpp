#include "heckemu/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace heckemu {

namespace {

// exact division of integer polynomials, ascending coefficients
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (long i = long(num.size()) - long(den.size()); i >= 0; --i) {
        Integer c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

std::vector<Integer> cyclotomic_poly_uncached(unsigned n, const std::map<unsigned, std::vector<Integer>>& cache) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Integer> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(std::move(p), cache.at(d));
    return p;
}

struct ZetaContext {
    unsigned order = 0;
    unsigned degree = 0;
    std::vector<Integer> minpoly;                  // Phi_N, ascending, monic
    std::vector<std::vector<Rational>> zeta_pow;   // zeta^k as coordinates, k in [0, N)
};

std::shared_ptr<const ZetaContext> make_context(unsigned n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("zeta order must be even and >= 2");
    auto ctx = std::make_shared<ZetaContext>();
    ctx->order = n;
    ctx->minpoly = cyclotomic_poly(n);
    ctx->degree = unsigned(ctx->minpoly.size() - 1);
    // powers of zeta reduced mod Phi_N: repeated multiplication by x
    std::vector<Rational> cur(ctx->degree, 0);
    cur[0] = 1;
    ctx->zeta_pow.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        ctx->zeta_pow.push_back(cur);
        // multiply by x
        Rational top = cur[ctx->degree - 1];
        for (unsigned i = ctx->degree - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < ctx->degree; ++i)
                cur[i] -= top * Rational(ctx->minpoly[i]);
    }
    return ctx;
}

std::shared_ptr<const ZetaContext>& context_slot() {
    static std::shared_ptr<const ZetaContext> ctx = make_context(24);
    return ctx;
}

const ZetaContext& ctx() { return *context_slot(); }

}  // namespace

void set_zeta_order(unsigned n) {
    if (n != ctx().order) context_slot() = make_context(n);
}

unsigned zeta_order() { return ctx().order; }
unsigned zeta_degree() { return ctx().degree; }

std::vector<Integer> cyclotomic_poly(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Integer>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0 && !cache.count(d)) cache[d] = cyclotomic_poly_uncached(d, cache);
    return cache.at(n);
}

CycRational::CycRational() : c_(zeta_degree(), Rational(0)) {}

CycRational::CycRational(long n) : CycRational(Rational(n)) {}

CycRational::CycRational(const Rational& r) : c_(zeta_degree(), Rational(0)) { c_[0] = reduced(r); }

CycRational CycRational::zeta(long k) {
    long n = long(zeta_order());
    long kk = ((k % n) + n) % n;
    CycRational out;
    out.c_ = ctx().zeta_pow[std::size_t(kk)];
    return out;
}

CycRational CycRational::root_of_unity(unsigned order, long power) {
    if (order == 0 || zeta_order() % order != 0)
        throw std::invalid_argument("root order " + std::to_string(order) + " does not divide N");
    return zeta(long(zeta_order() / order) * power);
}

bool CycRational::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool CycRational::is_one() const { return is_rational() && c_[0] == 1; }

bool CycRational::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycRational::rational_part() const {
    if (!is_rational()) throw std::logic_error("rational_part of irrational cyclotomic number");
    return c_[0];
}

CycRational CycRational::operator-() const {
    CycRational out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
}

CycRational& CycRational::operator+=(const CycRational& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycRational& CycRational::operator-=(const CycRational& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycRational& CycRational::operator*=(const CycRational& o) {
    const unsigned d = zeta_degree();
    if (o.is_rational()) {  // scalar fast path
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    const auto& mp = ctx().minpoly;
    for (long i = long(prod.size()) - 1; i >= long(d); --i) {
        if (prod[i] == 0) continue;
        Rational t = prod[i];
        prod[i] = 0;
        for (unsigned j = 0; j < d; ++j) prod[i - d + j] -= t * Rational(mp[j]);
    }
    for (unsigned i = 0; i < d; ++i) c_[i] = prod[i];
    return *this;
}

CycRational CycRational::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (is_rational()) return CycRational(Rational(1) / c_[0]);
    // extended Euclid in Q[x] against Phi_N
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        for (long i = long(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    Poly r0(ctx().minpoly.size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx().minpoly[i]);
    Poly r1(c_.begin(), c_.end());
    Poly s0{Rational(0)}, s1{Rational(1)};  // coeffs of *this in the combination
    while (true) {
        long d1 = deg(r1);
        if (d1 <= 0) break;
        long d0 = deg(r0);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        Rational c = r0[d0] / r1[d1];
        long shift = d0 - d1;
        if (long(r0.size()) < d1 + shift + 1) r0.resize(d1 + shift + 1, Rational(0));
        for (long i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= c * s1[i];
    }
    // r1 is a nonzero constant: inverse = s1 / r1
    if (deg(r1) != 0) throw std::logic_error("Phi_N not coprime to element");
    Rational unit = r1[0];
    CycRational out;
    for (std::size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / unit;
    return out;
}

CycRational& CycRational::operator/=(const CycRational& o) { return *this *= o.inverse(); }

CycRational CycRational::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycRational out(1), base(*this);
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

std::string CycRational::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace heckemu
