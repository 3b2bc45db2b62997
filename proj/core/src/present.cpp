#include "heckemu/present.hpp"

#include <algorithm>
#include <sstream>

namespace heckemu {

bool LaurentPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const CycRational& x) { return x.is_zero(); });
}

void LaurentPoly::trim() {
    std::size_t lo = 0;
    while (lo < c.size() && c[lo].is_zero()) ++lo;
    std::size_t hi = c.size();
    while (hi > lo && c[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        c.assign(1, CycRational());
        minexp = 0;
        return;
    }
    c = std::vector<CycRational>(c.begin() + long(lo), c.begin() + long(hi));
    minexp += long(lo);
}

LaurentPoly& LaurentPoly::mul_scalar(const CycRational& x) {
    for (auto& y : c) y *= x;
    return *this;
}

LaurentPoly& LaurentPoly::mul_brick(const CycRational& cc, long e) {
    // (sum a_i v^i)(1 - cc v^e): subtract the shifted scaled copy
    if (e == 0) throw std::logic_error("brick with zero v-exponent");
    std::vector<CycRational> out(c.size() + std::size_t(std::labs(e)), CycRational());
    long shift = e > 0 ? e : 0;
    long neg = e < 0 ? -e : 0;  // new minexp drops by |e| for negative e
    for (std::size_t i = 0; i < c.size(); ++i) out[i + std::size_t(neg)] += c[i];
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        out[i + std::size_t(shift)] -= c[i] * cc;
    }
    minexp -= neg;
    c = std::move(out);
    trim();
    return *this;
}

std::string LaurentPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c[i].str() << ")v^" << (minexp + long(i));
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::pair<LaurentPoly, LaurentPoly> expand(const FactoredRatFn& f) {
    if (!f.is_numeric()) throw std::logic_error("expand requires a numeric function");
    LaurentPoly num = LaurentPoly::one();
    num.mul_scalar(f.coeff() * CycRational::zeta(f.lead().zeta));
    num.mul_vpow(f.lead().vexp);
    LaurentPoly den = LaurentPoly::one();
    for (const auto& [fac, e] : f.factors()) {
        LaurentPoly& side = e > 0 ? num : den;
        CycRational cc = CycRational::zeta(fac.w.zeta);
        for (long k = 0; k < std::labs(e); ++k) side.mul_brick(cc, fac.w.vexp);
    }
    return {std::move(num), std::move(den)};
}

namespace {

// rational polynomial with v-offset, for trial division
struct QPoly {
    long minexp = 0;
    long unit = 0;  // extracted zeta exponent
    std::vector<Rational> c;
};

QPoly rationalize(const LaurentPoly& p) {
    long n = long(zeta_order());
    for (long a = 0; a < n; ++a) {
        CycRational u = CycRational::zeta(-a);
        bool ok = true;
        std::vector<Rational> out(p.c.size());
        for (std::size_t i = 0; i < p.c.size() && ok; ++i) {
            if (p.c[i].is_zero()) continue;
            CycRational t = p.c[i] * u;
            if (!t.is_rational()) ok = false;
            else out[i] = t.rational_part();
        }
        if (ok) return QPoly{p.minexp, a, std::move(out)};
    }
    throw irrational_coefficients_error();
}

// divide by monic d in place as long as divisible; returns count
long divide_out(std::vector<Rational>& p, const std::vector<Rational>& d) {
    long count = 0;
    while (true) {
        long pd = -1, dd = long(d.size()) - 1;
        for (long i = long(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) { pd = i; break; }
        if (pd < dd) return count;
        std::vector<Rational> work = p;
        std::vector<Rational> q(std::size_t(pd - dd + 1));
        bool exact = true;
        for (long i = pd - dd; i >= 0; --i) {
            Rational coef = work[std::size_t(i + dd)];  // d is monic
            q[std::size_t(i)] = coef;
            if (coef != 0)
                for (long j = 0; j <= dd; ++j) work[std::size_t(i + j)] -= coef * d[std::size_t(j)];
        }
        for (const auto& r : work)
            if (r != 0) { exact = false; break; }
        if (!exact) return count;
        p = std::move(q);
        ++count;
    }
}

std::vector<Rational> phi_in_v(unsigned m) {
    auto zp = cyclotomic_poly(m);
    std::vector<Rational> out(zp.size());
    for (std::size_t i = 0; i < zp.size(); ++i) out[i] = Rational(zp[i]);
    return out;
}

}  // namespace

SignedCycloProduct cyclo_present(const FactoredRatFn& f, unsigned bound) {
    auto [numl, denl] = expand(f);
    if (numl.is_zero()) throw std::logic_error("cyclo_present of the zero function");
    QPoly num = rationalize(numl);
    QPoly den = rationalize(denl);

    // net exponents of Phi_m(v) for m <= 2*bound, then regroup into Phi_n(q)
    std::map<long, long> gv;
    for (unsigned m = 1; m <= 2 * bound; ++m) {
        auto d = phi_in_v(m);
        long e = divide_out(num.c, d) - divide_out(den.c, d);
        if (e != 0) gv[long(m)] = e;
    }
    auto monomial_of = [](const QPoly& p) -> std::pair<Rational, long> {
        long idx = -1;
        for (long i = 0; i < long(p.c.size()); ++i) {
            if (p.c[std::size_t(i)] == 0) continue;
            if (idx >= 0) throw noncyclotomic_remainder_error("remainder is not c*v^k: " +
                                                              std::to_string(p.c.size()) + " terms left");
            idx = i;
        }
        if (idx < 0) throw std::logic_error("zero side in cyclo_present");
        return {p.c[std::size_t(idx)], p.minexp + idx};
    };
    auto [cn, kn] = monomial_of(num);
    auto [cd, kd] = monomial_of(den);

    SignedCycloProduct out;
    out.c = cn / cd;
    out.zeta = Monomial::norm_zeta(num.unit - den.unit);
    out.vexp = kn - kd;
    // Phi_n(q) = Phi_n(v) Phi_{2n}(v) for odd n, Phi_{2n}(v) for even n
    for (long n = 1; n <= long(bound); n += 2) {
        long e = gv.count(n) ? gv[n] : 0;
        if (e == 0) continue;
        out.exps[n] = e;
        gv.erase(n);
        gv[2 * n] -= e;
        if (gv[2 * n] == 0) gv.erase(2 * n);
    }
    for (long n = 2; n <= long(bound); n += 2) {
        auto it = gv.find(2 * n);
        if (it == gv.end()) continue;
        out.exps[n] = it->second;
        gv.erase(it);
    }
    if (!gv.empty()) {
        std::ostringstream os;
        os << "leftover v-cyclotomic factors not expressible in q:";
        for (auto& [m, e] : gv) os << " Phi_" << m << "(v)^" << e;
        throw noncyclotomic_remainder_error(os.str());
    }
    return out;
}

SignedCycloProduct& SignedCycloProduct::operator*=(const SignedCycloProduct& o) {
    c *= o.c;
    zeta = Monomial::norm_zeta(zeta + o.zeta);
    vexp += o.vexp;
    for (const auto& [n, e] : o.exps) {
        exps[n] += e;
        if (exps[n] == 0) exps.erase(n);
    }
    return *this;
}

SignedCycloProduct& SignedCycloProduct::operator/=(const SignedCycloProduct& o) {
    c /= o.c;
    zeta = Monomial::norm_zeta(zeta - o.zeta);
    vexp -= o.vexp;
    for (const auto& [n, e] : o.exps) {
        exps[n] -= e;
        if (exps[n] == 0) exps.erase(n);
    }
    return *this;
}

std::string SignedCycloProduct::str_phi() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, e] : exps) {
        if (!first) os << " ";
        os << "Phi" << n;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string SignedCycloProduct::str() const {
    std::ostringstream os;
    os << c.get_str();
    if (zeta != 0) os << " * z^" << zeta;
    if (vexp != 0) os << " * v^" << vexp;
    if (!exps.empty()) os << " * " << str_phi();
    return os.str();
}

FactoredRatFn scp_to_factored(const SignedCycloProduct& p, std::size_t nvars) {
    // Phi_n(q) = prod_{d | n} (1 - q^d)^{moebius(n/d)}
    auto moebius = [](long m) {
        long out = 1;
        for (long d = 2; d * d <= m; ++d) {
            if (m % d != 0) continue;
            m /= d;
            if (m % d == 0) return 0L;
            out = -out;
        }
        if (m > 1) out = -out;
        return out;
    };
    FactoredRatFn f = FactoredRatFn::scalar(CycRational(p.c), nvars);
    f.mul_coeff(CycRational::zeta(p.zeta));
    f.mul_monomial(Monomial::v_power(p.vexp, nvars));
    for (const auto& [n, e] : p.exps) {
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            long mu = moebius(n / d);
            if (mu == 0) continue;
            f.mul_brick(Monomial::v_power(2 * d, nvars), mu * e);
        }
        // prod_{d|n} (1-q^d)^{mu(n/d)} = (-1)^{[n=1]} Phi_n(q)
        if (n == 1 && e % 2 != 0) f.mul_coeff(CycRational(-1));
    }
    return f;
}

}  // namespace heckemu
