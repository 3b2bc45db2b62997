#pragma once

#include "heckemu/factored.hpp"
#include "heckemu/params.hpp"
#include "heckemu/roots.hpp"

#include <string>

namespace heckemu {

/// One normalized affine Hecke algebra, reduced to its mu-function data:
/// root system, parameter values per root class, and normalization factor d.
/// Parameter values are the per-class m_eps(alpha); base-q^2 algebras carry
/// the doubling inside the values (m(t_i) = bfrak * m_plusminus).
struct HeckeSpec {
    RootSystemSpec roots;
    Rational m_single_minus = 0;  // B only: m_-(t_i)
    Rational m_single_plus = 0;   // B only: m_+(t_i)
    Rational m_pair = 1;          // B/D: m_+(t_i t_j^k); equals bfrak
    Rational m_long = 0, m_short = 0;  // G2/F4
    int bfrak = 1;
    FactoredRatFn d;  // numeric, nvars = rank
    std::string label;

    int rank() const { return roots.rank; }
};

/// B_rank spec with the type-B parameter rules: m(pair) = b, m(t_i) = b*m+-.
HeckeSpec classical_spec(const ClassicalParams& p, int rank, FactoredRatFn d,
                         const std::string& label = "");

HeckeSpec g2_spec();  // G2(3,1)[q] with its printed d
HeckeSpec f4_spec();  // F4(2,1)[q] with its printed d

/// The assembled normalized mu-function d * prod over roots, as a factored
/// rational function in rank() variables (global v-power and sign omitted).
FactoredRatFn mu(const HeckeSpec& spec);
FactoredRatFn mu_without_d(const HeckeSpec& spec);

/// Value of a root character at the coordinates (symbolic or numeric).
Monomial root_value(const Root& r, const std::vector<Monomial>& coords);

// --- normalization factors ---------------------------------------------

/// d^0_{m-,m+}: the two finite products with bounds floor(|m- -+ m+|).
FactoredRatFn d_zero(const Rational& mminus, const Rational& mplus);

/// extra-special source factor (v^b - v^-b)^{-rank} * d^0
FactoredRatFn d_classical(const ClassicalParams& p, int rank);

/// target factor (v - v^-1)^{-l} (v + v^-1)^{-delta_m*delta_p}
FactoredRatFn d_target(int l, int delta_minus, int delta_plus);

FactoredRatFn d_iwahori_g2();
FactoredRatFn d_iwahori_f4();

/// closed forms of the phi/psi base-point residues as factored functions
FactoredRatFn cst_closed_form(const Rational& mminus, const Rational& mplus);
FactoredRatFn cstsympl_closed_form(const Rational& mminus, const Rational& mplus);

/// d-factors along the phi- and psi-chains, defined by the residue recursion
/// d_{m-,m+} = d_{m-,m+-1} * Res with base value 1 at the chain bottom.
FactoredRatFn d_phi_chain(const Rational& mminus, const Rational& mplus, int rank);
FactoredRatFn d_psi_chain(const Rational& mminus, const Rational& mplus, int rank);

/// substitute v -> v^{-1} (lead and every brick), for d(v) = d(1/v) checks
FactoredRatFn invert_v(const FactoredRatFn& f);

}  // namespace heckemu
