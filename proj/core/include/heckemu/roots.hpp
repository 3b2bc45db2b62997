#pragma once

#include "heckemu/monomial.hpp"

namespace heckemu {

enum class RootFamily { A, B, D, G2, F4 };

/// Orbit label of a positive root. B/D use {Pair, Single} (t_i t_j^{±1} vs
/// t_i); G2/F4 use {Long, Short}.
enum class RootClass { Pair, Single, Long, Short };

struct RootSystemSpec {
    RootFamily family;
    int rank;
};

/// A positive root as multiplicative-character exponents: torus coordinates
/// t_1..t_l for A/B/D, simple-root coordinates for G2/F4 (G2 order: short,
/// long; F4 Bourbaki order: long, long, short, short).
struct Root {
    std::vector<long> exps;
    RootClass cls;
};

std::vector<Root> positive_roots(const RootSystemSpec& spec);

const char* family_name(RootFamily f);

/// Full Weyl group of an exceptional family as integer matrices acting on
/// simple-root coordinates (columns = images of the simple roots).
const std::vector<std::vector<std::vector<long>>>& weyl_matrices(RootFamily family);

/// Orbit of a point under the Weyl group, as coordinate tuples. For family B
/// these are the 2^l l! signed permutations; for G2/F4 the matrix action on
/// simple-root-value coordinates. Deduplicated, deterministic order.
std::vector<std::vector<Monomial>> weyl_images(const std::vector<Monomial>& point,
                                               const RootSystemSpec& spec);

/// Canonical orbit representative used for deduplication: sort-plus-sign
/// normal form for B/D, lexicographic orbit minimum for G2/F4.
std::vector<Monomial> orbit_normal_form(const std::vector<Monomial>& point,
                                        const RootSystemSpec& spec);

}  // namespace heckemu
