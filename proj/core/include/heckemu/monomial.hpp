#pragma once

#include "heckemu/cyclotomic.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

namespace heckemu {

/// A term zeta^a * v^e * prod s_i^{f_i}. The torus variable q is v^2.
struct Monomial {
    long zeta = 0;           // exponent of zeta_N, kept in [0, N)
    long vexp = 0;
    std::vector<long> sexp;  // exponents of s_1..s_n

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : sexp(nvars, 0) {}

    static Monomial v_power(long e, std::size_t nvars = 0) {
        Monomial m(nvars);
        m.vexp = e;
        return m;
    }

    /// q^e with e in (1/2)Z; vexp = 2e must be integral.
    static Monomial q_power(const Rational& e, std::size_t nvars = 0) {
        Rational two_e = e * 2;
        if (two_e.get_den() != 1) throw std::invalid_argument("q-exponent must lie in (1/2)Z");
        return v_power(two_e.get_num().get_si(), nvars);
    }

    static Monomial var(std::size_t i, std::size_t nvars, long e = 1) {
        Monomial m(nvars);
        m.sexp.at(i) = e;
        return m;
    }

    static Monomial zeta_power(long a, std::size_t nvars = 0) {
        Monomial m(nvars);
        m.zeta = norm_zeta(a);
        return m;
    }

    static long norm_zeta(long a) {
        long n = long(zeta_order());
        return ((a % n) + n) % n;
    }

    std::size_t nvars() const { return sexp.size(); }
    bool is_identity() const { return zeta == 0 && exps_zero(); }
    bool is_numeric() const {
        return std::all_of(sexp.begin(), sexp.end(), [](long e) { return e == 0; });
    }
    bool exps_zero() const { return vexp == 0 && is_numeric(); }

    /// sign of the first nonzero entry of (vexp, sexp...); 0 if all zero
    int lex_sign() const {
        if (vexp != 0) return vexp > 0 ? 1 : -1;
        for (long e : sexp)
            if (e != 0) return e > 0 ? 1 : -1;
        return 0;
    }

    /// gcd of all of (vexp, sexp); 0 when exps_zero()
    long exp_gcd() const {
        long g = std::abs(vexp);
        for (long e : sexp) g = std::gcd(g, std::abs(e));
        return g;
    }

    Monomial& operator*=(const Monomial& o) {
        zeta = norm_zeta(zeta + o.zeta);
        vexp += o.vexp;
        for (std::size_t i = 0; i < sexp.size(); ++i) sexp[i] += o.sexp[i];
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    Monomial inverse() const {
        Monomial m(*this);
        m.zeta = norm_zeta(-zeta);
        m.vexp = -vexp;
        for (auto& e : m.sexp) e = -e;
        return m;
    }

    Monomial pow(long k) const {
        Monomial m(*this);
        m.zeta = norm_zeta(zeta * k);
        m.vexp = vexp * k;
        for (auto& e : m.sexp) e *= k;
        return m;
    }

    Monomial negated() const {  // multiplication by -1 = zeta^{N/2}
        Monomial m(*this);
        m.zeta = norm_zeta(m.zeta + long(zeta_order()) / 2);
        return m;
    }

    /// pull back through s_i -> map[i]; result has new_nvars variables
    Monomial substituted(const std::vector<Monomial>& map, std::size_t new_nvars) const {
        Monomial out(new_nvars);
        out.zeta = zeta;
        out.vexp = vexp;
        for (std::size_t i = 0; i < sexp.size(); ++i) {
            if (sexp[i] == 0) continue;
            Monomial p = map.at(i).pow(sexp[i]);
            out *= p;
        }
        return out;
    }

    CycRational eval(const Rational& v, const std::vector<Rational>& s) const {
        auto rpow = [](const Rational& b, long e) {
            Rational out = 1;
            Rational base = e >= 0 ? b : Rational(1) / b;
            for (long k = std::labs(e); k > 0; --k) out *= base;
            return out;
        };
        Rational r = rpow(v, vexp);
        for (std::size_t i = 0; i < sexp.size(); ++i)
            if (sexp[i] != 0) r *= rpow(s.at(i), sexp[i]);
        return CycRational::zeta(zeta) * CycRational(r);
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.zeta == b.zeta && a.vexp == b.vexp && a.sexp == b.sexp;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.vexp != b.vexp) return a.vexp < b.vexp;
        if (a.sexp != b.sexp) return a.sexp < b.sexp;
        return a.zeta < b.zeta;
    }

    std::string str() const {
        std::ostringstream os;
        bool any = false;
        if (zeta != 0) {
            if (2 * zeta == long(zeta_order())) os << "-";
            else os << "z^" << zeta << "*";
        }
        if (vexp != 0) {
            os << "v^" << vexp;
            any = true;
        }
        for (std::size_t i = 0; i < sexp.size(); ++i) {
            if (sexp[i] == 0) continue;
            if (any) os << "*";
            os << "s" << (i + 1);
            if (sexp[i] != 1) os << "^" << sexp[i];
            any = true;
        }
        if (!any) os << "1";
        return os.str();
    }
};

}  // namespace heckemu
