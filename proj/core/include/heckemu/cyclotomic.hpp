#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckemu {

using Rational = mpq_class;
using Integer = mpz_class;

/// mpq_class(p, q) does not reduce; normalize before relying on num/den
inline Rational reduced(const Rational& r) {
    Rational out = r;
    out.canonicalize();
    return out;
}

inline bool is_integer(const Rational& r) { return reduced(r).get_den() == 1; }

inline long to_long(const Rational& r) {
    Rational c = reduced(r);
    if (c.get_den() != 1) throw std::invalid_argument("expected an integer, got " + c.get_str());
    return c.get_num().get_si();
}

inline long floor_long(const Rational& r) {
    Rational c = reduced(r);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
    return f.get_si();
}

/// Order N of the session root of unity zeta_N. Fixed at startup (default 24);
/// all CycRational values are residues mod Phi_N and must not outlive a change.
void set_zeta_order(unsigned n);
unsigned zeta_order();
unsigned zeta_degree();  // Euler phi(N)

/// Restores the previous order on scope exit. Test helper.
struct ScopedZetaOrder {
    unsigned saved;
    explicit ScopedZetaOrder(unsigned n) : saved(zeta_order()) { set_zeta_order(n); }
    ~ScopedZetaOrder() { set_zeta_order(saved); }
};

/// Coefficients of Phi_n(x), ascending degree.
std::vector<Integer> cyclotomic_poly(unsigned n);

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in Q(zeta_N)") {}
};

/// Element of Q(zeta_N), stored as the reduced residue mod Phi_N(x).
class CycRational {
public:
    CycRational();  // zero
    CycRational(long n);
    CycRational(const Rational& r);

    static CycRational zeta(long k);                                // zeta_N^k
    static CycRational root_of_unity(unsigned order, long power);   // zeta_order^power, order | N

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const;  // requires is_rational()
    const std::vector<Rational>& coords() const { return c_; }

    CycRational operator-() const;
    CycRational& operator+=(const CycRational& o);
    CycRational& operator-=(const CycRational& o);
    CycRational& operator*=(const CycRational& o);
    CycRational& operator/=(const CycRational& o);
    CycRational inverse() const;
    CycRational pow(long k) const;

    friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
    friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
    friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }
    friend CycRational operator/(CycRational a, const CycRational& b) { return a /= b; }
    friend bool operator==(const CycRational& a, const CycRational& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycRational& a, const CycRational& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<Rational> c_;  // length phi(N)
};

}  // namespace heckemu
