#pragma once

#include "heckemu/factored.hpp"

namespace heckemu {

struct irrational_coefficients_error : std::runtime_error {
    irrational_coefficients_error()
        : std::runtime_error("expansion has coefficients outside Q (even after unit extraction)") {}
};

struct noncyclotomic_remainder_error : std::runtime_error {
    explicit noncyclotomic_remainder_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense Laurent polynomial in v over Q(zeta_N).
struct LaurentPoly {
    long minexp = 0;
    std::vector<CycRational> c;  // c[i] multiplies v^{minexp + i}

    static LaurentPoly one() { return LaurentPoly{0, {CycRational(1)}}; }
    bool is_zero() const;
    void trim();
    LaurentPoly& mul_scalar(const CycRational& x);
    LaurentPoly& mul_vpow(long e) { minexp += e; return *this; }
    /// multiply by (1 - c v^e)
    LaurentPoly& mul_brick(const CycRational& cc, long e);
    std::string str() const;
};

/// numerator/denominator expansion of a numeric FactoredRatFn (no s-variables)
std::pair<LaurentPoly, LaurentPoly> expand(const FactoredRatFn& f);

/// c * zeta^a * v^vexp * prod Phi_n(q)^{exps[n]}, q = v^2. The unit zeta^a is
/// tracked for table rows whose residue carries a root of unity; comparisons
/// "up to unit" look at exps only.
struct SignedCycloProduct {
    Rational c = 1;
    long zeta = 0;
    long vexp = 0;
    std::map<long, long> exps;  // no zero exponents

    SignedCycloProduct& operator*=(const SignedCycloProduct& o);
    SignedCycloProduct& operator/=(const SignedCycloProduct& o);
    friend SignedCycloProduct operator*(SignedCycloProduct a, const SignedCycloProduct& b) { return a *= b; }
    friend SignedCycloProduct operator/(SignedCycloProduct a, const SignedCycloProduct& b) { return a /= b; }

    bool equal_up_to_unit(const SignedCycloProduct& o) const { return exps == o.exps; }
    friend bool operator==(const SignedCycloProduct& a, const SignedCycloProduct& b) {
        return a.c == b.c && a.zeta == b.zeta && a.vexp == b.vexp && a.exps == b.exps;
    }

    std::string str() const;        // "3/2 * v^4 * Phi1^2 Phi2^-1"
    std::string str_phi() const;    // just the Phi part, "Phi2^-2 Phi3^-2 Phi6^-2"
};

/// Exact presentation of a numeric FactoredRatFn as a signed cyclotomic
/// product; trial-divides by Phi_n(q) for n <= bound. Throws
/// irrational_coefficients_error / noncyclotomic_remainder_error.
SignedCycloProduct cyclo_present(const FactoredRatFn& f, unsigned bound = 64);

/// inverse of cyclo_present: rebuild prod Phi_n(q)^{e} as factored bricks
FactoredRatFn scp_to_factored(const SignedCycloProduct& p, std::size_t nvars = 0);

}  // namespace heckemu
