#include "heckemu/transfer.hpp"

#include <sstream>

namespace heckemu {

std::vector<Monomial> sigma_e(const Rational& m) {
    if (m <= 1) throw std::invalid_argument("sigma_e requires m > 1");
    QuarterData q = quarter_data(m);
    Rational top = 2 * m - Rational(3, 2);  // integer for quarter m
    if (!is_integer(top)) throw std::invalid_argument("sigma_e requires m in Z +- 1/4");
    std::vector<Monomial> out;
    for (long e = q.delta; e <= to_long(top); ++e)
        out.push_back(Monomial::q_power(Rational(e)));
    return out;
}

std::vector<Monomial> r_e(const Rational& m) {
    if (m <= 0) throw std::invalid_argument("r_e requires m > 0");
    if (m < 1) return {};  // r_e(1/4) = r_e(3/4) = ()
    std::vector<Monomial> out = sigma_e(m);
    auto rest = r_e(m - 1);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

namespace {

std::vector<Monomial> embed_vars(int n, std::size_t nvars) {
    std::vector<Monomial> out;
    for (int i = 0; i < n; ++i) out.push_back(Monomial::var(std::size_t(i), nvars));
    return out;
}

Monomial lift_numeric(const Monomial& m, std::size_t nvars) {
    Monomial out(nvars);
    out.zeta = m.zeta;
    out.vexp = m.vexp;
    return out;
}

}  // namespace

Morphism phi_stm(int n, const Rational& mminus, const Rational& mplus) {
    if (!is_integer(Rational(mplus - Rational(1, 2))) || !is_integer(Rational(mminus - Rational(1, 2))))
        throw std::invalid_argument("phi requires m+- in Z + 1/2");
    if (mplus <= Rational(1, 2)) throw std::invalid_argument("phi requires m+ > 1/2");
    ClassicalParams src = classify_params(mminus, mplus);
    ClassicalParams tgt = classify_params(mminus, mplus - 1);
    const int k = int(to_long(Rational(mplus - Rational(1, 2))));
    const int l = n + k;
    Morphism m;
    m.family = MorphismFamily::Phi;
    m.source_rank = n;
    m.target_rank = l;
    m.coord_map = embed_vars(n, std::size_t(n));
    for (int i = 1; i <= k; ++i)
        m.coord_map.push_back(Monomial::v_power(long(src.bfrak) * (2 * i - 1), std::size_t(n)));
    m.source = classical_spec(src, n, d_phi_chain(mminus, mplus, n), "phi source");
    m.target = classical_spec(tgt, l, d_phi_chain(mminus, mplus - 1, l), "phi target");
    std::ostringstream os;
    os << "phi(" << mminus.get_str() << "," << mplus.get_str() << ") rank " << n;
    m.label = os.str();
    return m;
}

Morphism psi_stm(int n, const Rational& mminus, const Rational& mplus) {
    if (!is_integer(mplus) || mplus < 1) throw std::invalid_argument("psi requires m+ in Z, m+ >= 1");
    ClassicalParams src = classify_params(mminus, mplus);
    ClassicalParams tgt = classify_params(mminus, mplus - 2);
    const long mp = to_long(mplus);
    const int l = n + int(2 * (mp - 1));
    Morphism m;
    m.family = MorphismFamily::Psi;
    m.source_rank = n;
    m.target_rank = l;
    m.coord_map = embed_vars(n, std::size_t(n));
    if (mp >= 2) {
        m.coord_map.push_back(Monomial(std::size_t(n)));  // the coordinate 1
        for (long k = 1; k <= mp - 2; ++k) {
            Monomial qk = Monomial::q_power(Rational(src.bfrak) * k, std::size_t(n));
            m.coord_map.push_back(qk);
            m.coord_map.push_back(qk);
        }
        m.coord_map.push_back(Monomial::q_power(Rational(src.bfrak) * (mp - 1), std::size_t(n)));
    }
    m.source = classical_spec(src, n, d_psi_chain(mminus, mplus, n), "psi source");
    m.target = classical_spec(tgt, l, d_psi_chain(mminus, mplus - 2, l), "psi target");
    std::ostringstream os;
    os << "psi(" << mminus.get_str() << "," << mplus.get_str() << ") rank " << n;
    m.label = os.str();
    return m;
}

int xi_target_rank(int n, const Rational& mminus, const Rational& mplus) {
    return 2 * n + int(r_e(mminus).size()) + int(r_e(mplus).size());
}

std::optional<std::pair<int, int>> xi_rank_witness(int n, const Rational& mminus,
                                                   const Rational& mplus) {
    ClassicalParams p = classify_params(mminus, mplus);
    const int l = xi_target_rank(n, mminus, mplus);
    // class V: l = 2n + (a/2)(a+1) + 2b(b+1); class VI: l = 2n + (a/2)(a+1) + 2b^2 - delta+
    for (int a = 0; a * (a + 1) / 2 <= l + 2; ++a)
        for (int b = 0; 2 * b * b <= l + 2; ++b) {
            long val = 2 * n + a * (a + 1) / 2 + (p.cls == 5 ? 2 * b * (b + 1) : 2 * b * b - p.delta_p);
            if (val == l) return std::make_pair(a, b);
        }
    return std::nullopt;
}

Morphism xi_stm(int n, const Rational& mminus, const Rational& mplus) {
    if (mminus <= 0 || mplus <= 0) throw std::invalid_argument("xi requires m+- > 0");
    ClassicalParams src = classify_params(mminus, mplus);
    if (!src.quarter()) throw std::invalid_argument("xi requires m+- in Z +- 1/4");
    ClassicalParams tgt = classify_params(Rational(src.delta_m), Rational(src.delta_p));
    const int l = xi_target_rank(n, mminus, mplus);
    Morphism m;
    m.family = MorphismFamily::Xi;
    m.source_rank = n;
    m.target_rank = l;
    for (const Monomial& u : r_e(mminus))
        m.coord_map.push_back(lift_numeric(u, std::size_t(n)).negated());
    for (int i = 0; i < n; ++i) {
        m.coord_map.push_back(Monomial::v_power(-1, std::size_t(n)) * Monomial::var(std::size_t(i), std::size_t(n)));
        m.coord_map.push_back(Monomial::v_power(1, std::size_t(n)) * Monomial::var(std::size_t(i), std::size_t(n)));
    }
    for (const Monomial& u : r_e(mplus)) m.coord_map.push_back(lift_numeric(u, std::size_t(n)));
    m.source = classical_spec(src, n, d_classical(src, n), "xi source");
    m.target = classical_spec(tgt, l, d_target(l, src.delta_m, src.delta_p), "xi target");
    std::ostringstream os;
    os << "xi(" << mminus.get_str() << "," << mplus.get_str() << ") rank " << n;
    m.label = os.str();
    return m;
}

Morphism weyl_stm(const HeckeSpec& spec, const std::vector<std::pair<int, bool>>& signed_perm) {
    if (spec.roots.family != RootFamily::B) throw std::invalid_argument("weyl_stm expects a type-B spec");
    const int n = spec.rank();
    if (int(signed_perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    Morphism m;
    m.family = MorphismFamily::Weyl;
    m.source_rank = n;
    m.target_rank = n;
    for (const auto& [target_index, invert] : signed_perm) {
        Monomial c = Monomial::var(std::size_t(target_index), std::size_t(n));
        m.coord_map.push_back(invert ? c.inverse() : c);
    }
    m.source = spec;
    m.target = spec;
    m.label = "weyl";
    return m;
}

T3Report verify_T3(const Morphism& m, std::uint64_t seed, int trials) {
    T3Report rep;
    FactoredRatFn target_mu = mu(m.target);
    auto pulled = target_mu.substituted(m.coord_map, std::size_t(m.source_rank));
    rep.dropped_num = pulled.dropped_num;
    rep.dropped_den = pulled.dropped_den;
    rep.codim_check = (pulled.dropped_den - pulled.dropped_num == m.target_rank - m.source_rank);
    FactoredRatFn source_mu = mu(m.source);
    UnitComparison cmp = compare_up_to_unit_full(pulled.value, source_mu);
    rep.unit_quotient = cmp.ok;
    if (cmp.ok) {
        rep.c = cmp.c;
        rep.vexp = cmp.vexp;
        // scale source by (c, vexp) and cross-check with the randomized oracle
        FactoredRatFn scaled = source_mu;
        scaled.mul_coeff(CycRational(cmp.c));
        scaled.mul_monomial(Monomial::v_power(cmp.vexp, std::size_t(m.source_rank)));
        rep.oracle_agree = random_equal(pulled.value, scaled, trials, seed);
    } else {
        std::ostringstream os;
        os << "leftover " << cmp.quotient.str();
        rep.diagnostics = os.str();
    }
    rep.ok = rep.codim_check && rep.unit_quotient && rep.oracle_agree;
    return rep;
}

InductionConstants induction_constants(const Rational& mminus, const Rational& mplus) {
    if (!(mplus >= mminus && mminus > 0 && mplus > 1))
        throw std::invalid_argument("induction_constants requires m+ >= m- > 0, m+ > 1");
    ClassicalParams p = classify_params(mminus, mplus);
    ClassicalParams pr = classify_params(mminus, mplus - 1);  // delta+ flips

    auto point_coords = [](const Rational& mm, const Rational& mp) {
        std::vector<Monomial> coords;
        for (const Monomial& u : r_e(mm)) coords.push_back(u.negated());
        for (const Monomial& u : r_e(mp)) coords.push_back(u);
        return coords;
    };
    auto regularized = [](int delta_m, int delta_p, const std::vector<Monomial>& coords) {
        ClassicalParams t = classify_params(Rational(delta_m), Rational(delta_p));
        HeckeSpec spec = classical_spec(t, int(coords.size()), FactoredRatFn(coords.size()), "reg");
        return mu_without_d(spec).substituted(coords, 0).value;
    };

    auto r0 = point_coords(mminus, mplus);
    auto r0p = point_coords(mminus, mplus - 1);
    SignedCycloProduct res0 = cyclo_present(regularized(p.delta_m, p.delta_p, r0));
    SignedCycloProduct res0p = cyclo_present(regularized(p.delta_m, pr.delta_p, r0p));

    InductionConstants out;
    out.C = res0 / res0p;
    FactoredRatFn a = d_target(int(r0p.size()), p.delta_m, pr.delta_p).lifted(0);
    a *= d_zero(mminus, mplus);
    a *= d_target(int(r0.size()), p.delta_m, p.delta_p).lifted(0).inverse();
    a *= d_zero(mminus, mplus - 1).inverse();
    out.A = cyclo_present(a);
    out.equal = out.C.equal_up_to_unit(out.A);
    return out;
}

}  // namespace heckemu
