#pragma once

#include "heckemu/cyclotomic.hpp"

#include <utility>

namespace heckemu {

/// Classical single-root parameters (m-, m+) with 4m in Z, classified into
/// the six parameter classes; kappa/eps/delta are the quarter-integer data
/// |m| = kappa + (2 eps - 1)/4, delta = parity of kappa.
struct ClassicalParams {
    Rational mminus, mplus;
    int cls = 0;  // 1..6
    int kappa_m = 0, eps_m = 0, delta_m = 0;
    int kappa_p = 0, eps_p = 0, delta_p = 0;
    int bfrak = 1;  // 1 iff both m+ +- m- integral, else 2

    bool quarter() const { return cls == 5 || cls == 6; }
};

ClassicalParams classify_params(const Rational& mminus, const Rational& mplus);

/// kappa/eps/delta of a single quarter-integer parameter
struct QuarterData {
    int kappa, eps, delta;
};
QuarterData quarter_data(const Rational& m);

/// The spectral isomorphism group <eta_+, eta> (dihedral of order 8):
/// eta_+ negates m+, eta swaps m- and m+.
enum class IsoGen { EtaPlus, Eta };

std::pair<Rational, Rational> iso_apply(const std::pair<Rational, Rational>& m,
                                        const std::vector<IsoGen>& word);
ClassicalParams iso_apply(const ClassicalParams& p, const std::vector<IsoGen>& word);
std::vector<std::pair<Rational, Rational>> iso_orbit(const std::pair<Rational, Rational>& m);

}  // namespace heckemu
