#pragma once

#include "heckemu/mu.hpp"
#include "heckemu/present.hpp"

#include <optional>

namespace heckemu {

/// A point of the torus: numeric coordinates zeta^a v^e.
struct TorusPoint {
    std::vector<Monomial> coords;

    std::string str() const;
    friend bool operator<(const TorusPoint& a, const TorusPoint& b) { return a.coords < b.coords; }
    friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords == b.coords; }
};

struct ResidueReport {
    TorusPoint point;
    bool is_residual = false;
    long dropped_num = 0;
    long dropped_den = 0;
    std::optional<SignedCycloProduct> residue;  // present iff is_residual
};

/// Regularized evaluation of mu at the point: vanishing bricks dropped and
/// counted; residual iff dropped_den - dropped_num equals the rank.
ResidueReport residue_at(const HeckeSpec& spec, const TorusPoint& point, unsigned cyclo_bound = 64);

/// the closed-form base-point residues of the phi and psi families
SignedCycloProduct residue_closed_form_phi(const Rational& mminus, const Rational& mplus);
SignedCycloProduct residue_closed_form_psi(const Rational& mminus, const Rational& mplus);

/// base points whose residues the closed forms describe:
/// phi: t_i = v^{2i-1} in rank m+ - 1/2; psi: t_i = v^{2 floor(i/2)} in rank 2(m+ - 1)
TorusPoint phi_base_point(const Rational& mplus);
TorusPoint psi_base_point(const Rational& mplus);

struct SearchConfig {
    long exp_bound = -1;      // -1: the default 2 * max(m) * rank + 2
    unsigned cyclo_bound = 64;
    bool apply_exp_bound = true;
};

struct EnumerationResult {
    std::vector<ResidueReport> orbits;   // one representative per orbit
    long candidates_checked = 0;
    long out_of_bound = 0;               // solutions discarded by the exponent bound
    long exp_bound = 0;
};

/// All residual points, one representative per Weyl orbit. Searches the
/// linear systems "l independent roots take vanishing denominator values";
/// at a residual point those roots span, so every orbit is found.
EnumerationResult enumerate_residual_points(const HeckeSpec& spec, const SearchConfig& cfg = {});

}  // namespace heckemu
