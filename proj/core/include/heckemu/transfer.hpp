#pragma once

#include "heckemu/residue.hpp"

namespace heckemu {

enum class MorphismFamily { Phi, Psi, Xi, Weyl };

/// Torus morphism T^source_rank -> T^target_rank with the two normalized
/// algebras it transfers between. Coordinates with s-exponents embed the
/// source torus; the numeric tail is the base point of the image coset.
struct Morphism {
    MorphismFamily family;
    int source_rank = 0;
    int target_rank = 0;
    std::vector<Monomial> coord_map;  // target_rank monomials in source variables
    HeckeSpec source;
    HeckeSpec target;
    std::string label;
};

/// sigma_e(m) = (q^delta, q^{delta+1}, ..., q^{2m - 3/2}) for m in Z +- 1/4, m > 1
std::vector<Monomial> sigma_e(const Rational& m);

/// r_e(1/4) = r_e(3/4) = (); r_e(m) = (sigma_e(m), r_e(m-1))
std::vector<Monomial> r_e(const Rational& m);

Morphism phi_stm(int n, const Rational& mminus, const Rational& mplus);
Morphism psi_stm(int n, const Rational& mminus, const Rational& mplus);
Morphism xi_stm(int n, const Rational& mminus, const Rational& mplus);

/// signed permutation of a type-B torus as a rank-preserving morphism:
/// t_i -> t_{perm[i]}^{+-1}
Morphism weyl_stm(const HeckeSpec& spec, const std::vector<std::pair<int, bool>>& signed_perm);

int xi_target_rank(int n, const Rational& mminus, const Rational& mplus);
/// minimal (a, b) >= 0 with the class-V/VI closed form for l equal to
/// 2n + floor(l_-) + floor(l_+); empty when none exists
std::optional<std::pair<int, int>> xi_rank_witness(int n, const Rational& mminus,
                                                   const Rational& mplus);

struct T3Report {
    bool ok = false;
    Rational c;          // pullback(mu_target) = c * v^vexp * mu_source
    long vexp = 0;
    bool codim_check = false;
    long dropped_num = 0;
    long dropped_den = 0;
    bool unit_quotient = false;  // factored comparison succeeded
    bool oracle_agree = false;   // randomized cross-check agreed
    std::string diagnostics;     // leftover factors when not ok
};

T3Report verify_T3(const Morphism& m, std::uint64_t seed = 12345, int trials = 6);

struct InductionConstants {
    SignedCycloProduct C;  // ratio of residues, from first principles
    SignedCycloProduct A;  // the d-factor ratio
    bool equal = false;    // up to unit
};

/// C_{m-,m+-1} vs A(m+): the induction step identity for the xi family,
/// computed along two independent pipelines (requires m+ >= m- > 0, m+ > 1)
InductionConstants induction_constants(const Rational& mminus, const Rational& mplus);

}  // namespace heckemu
