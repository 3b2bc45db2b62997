#pragma once

#include "heckemu/residue.hpp"

namespace heckemu {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// exact rational from "p", "p/q", "-p/q"
Rational parse_rational(const std::string& s);

/// Point grammar: "(c1,c2,...)" with coordinate
///   c := ['-'] [unit '*'] base | ['-'] unit | "1"
///   unit := 't'<order> ['^'<int>]     (t3 = primitive third root, t4 = i, ...)
///   base := 'q' ['^' rational] | 'v' ['^' int]
/// Examples: "(1,q)", "(q^3,t3*q^-3)", "(q^2,q^2,t4*q^7/2,q)", "(-q^-7,q^2,q,q)".
TorusPoint parse_point(const std::string& s);

/// Table coordinates are printed with the long simple root first for G2;
/// internally G2 uses (short, long). F4 points are Bourbaki-ordered already.
TorusPoint point_from_paper(const RootSystemSpec& spec, const TorusPoint& paper);

}  // namespace heckemu
