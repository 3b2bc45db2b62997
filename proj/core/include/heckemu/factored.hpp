#pragma once

#include "heckemu/monomial.hpp"

#include <map>
#include <optional>

namespace heckemu {

/// The canonical brick (1 - w): w is not the identity, the exponent vector
/// (vexp, sexp) of w is lexicographically positive, and autonomous constants
/// (all exponents zero) never appear here.
struct Factor {
    Monomial w;
    friend bool operator<(const Factor& a, const Factor& b) { return a.w < b.w; }
    friend bool operator==(const Factor& a, const Factor& b) { return a.w == b.w; }
    std::string str() const { return "(1-" + w.str() + ")"; }
};

/// Result of canonicalize_factor: (1-w) is Zero, a constant of Q(zeta_N), or
/// coeff_adjust * lead_adjust * (1 - factor.w) with factor.w oriented.
struct FactorCanon {
    enum class Kind { Zero, Constant, Canonical } kind;
    CycRational constant;      // Kind::Constant only
    Factor factor;             // Kind::Canonical only
    CycRational coeff_adjust;  // Kind::Canonical only
    Monomial lead_adjust;
};

FactorCanon canonicalize_factor(const Monomial& w);

/// Splits an oriented brick (1 - w) into primitive bricks by extracting p-th
/// roots inside mu_N: (1 - zeta^a u^p) = prod_j (1 - zeta^{a/p + jN/p} u)
/// whenever p | N and p | a. Returns the list of w's whose bricks multiply to
/// (1 - w); singleton when no root can be extracted.
std::vector<Monomial> primitive_split(const Monomial& w);

struct SubstResult;

/// coeff * lead * prod (1 - w)^e, with every stored brick primitive and
/// oriented, so equal values have equal maps (up to coeff and lead).
class FactoredRatFn {
public:
    explicit FactoredRatFn(std::size_t nvars = 0)
        : nvars_(nvars), coeff_(1), lead_(nvars) {}

    static FactoredRatFn scalar(const CycRational& c, std::size_t nvars = 0);
    static FactoredRatFn from_monomial(const Monomial& m);

    std::size_t nvars() const { return nvars_; }
    const CycRational& coeff() const { return coeff_; }
    const Monomial& lead() const { return lead_; }
    const std::map<Factor, long>& factors() const { return factors_; }

    bool is_unit() const { return factors_.empty(); }  // scalar * monomial
    bool is_numeric() const;

    FactoredRatFn& mul_coeff(const CycRational& c);
    FactoredRatFn& mul_monomial(const Monomial& m);
    /// multiply by (1 - w)^e; w must not be the identity monomial
    FactoredRatFn& mul_brick(const Monomial& w, long e = 1);
    FactoredRatFn& operator*=(const FactoredRatFn& o);
    friend FactoredRatFn operator*(FactoredRatFn a, const FactoredRatFn& b) { return a *= b; }
    FactoredRatFn inverse() const;
    FactoredRatFn pow(long k) const;

    /// reinterpret a numeric function in a torus with more variables
    FactoredRatFn lifted(std::size_t nvars) const;

    /// Pull back through s_i -> map[i]. Bricks whose pullback is identically
    /// 1 - 1 are dropped and counted by exponent sign (the regularisation).
    SubstResult substituted(const std::vector<Monomial>& map, std::size_t new_nvars) const;

    /// exact evaluation; throws division_by_zero if a denominator brick vanishes
    CycRational eval(const Rational& v, const std::vector<Rational>& s) const;

    std::string str() const;

private:
    std::size_t nvars_;
    CycRational coeff_;
    Monomial lead_;
    std::map<Factor, long> factors_;
};

struct SubstResult {
    FactoredRatFn value;
    long dropped_num = 0;
    long dropped_den = 0;
};

struct UnitComparison {
    bool ok = false;
    Rational c;      // a = c * v^vexp * b when ok
    long vexp = 0;
    FactoredRatFn quotient;  // leftover a/b when not ok
};

/// a = c * v^k * b test by exact factor cancellation; empty optional when the
/// quotient is not a rational constant times a power of v.
std::optional<std::pair<Rational, long>> compare_up_to_unit(const FactoredRatFn& a,
                                                            const FactoredRatFn& b);
UnitComparison compare_up_to_unit_full(const FactoredRatFn& a, const FactoredRatFn& b);

/// Randomized proportionality check: exact evaluation at `trials` random
/// rational points (v > 1, s_i nonzero), resampling any point that zeroes a
/// brick of either side; true iff the ratio is the same constant every time.
bool random_equal(const FactoredRatFn& a, const FactoredRatFn& b, int trials, std::uint64_t seed);

}  // namespace heckemu
