#include "heckemu/mu.hpp"

namespace heckemu {

namespace {

long vexp_of(const Rational& qexp) {  // q^e = v^{2e}, must be integral
    return to_long(Rational(qexp * 2));
}

// (v^k - v^-k) = -v^-k (1 - v^{2k}) as a factored function
FactoredRatFn v_sym_diff(long k, std::size_t nvars) {
    FactoredRatFn f(nvars);
    f.mul_coeff(CycRational(-1));
    f.mul_monomial(Monomial::v_power(-k, nvars));
    f.mul_brick(Monomial::v_power(2 * k, nvars));
    return f;
}

// (v^k + v^-k) = v^-k (1 + v^{2k})
FactoredRatFn v_sym_sum(long k, std::size_t nvars) {
    FactoredRatFn f(nvars);
    f.mul_monomial(Monomial::v_power(-k, nvars));
    Monomial w = Monomial::v_power(2 * k, nvars).negated();
    f.mul_brick(w);
    return f;
}

// (1 + q^e) brick; e = 0 gives the constant 2
FactoredRatFn one_plus_q(const Rational& e, std::size_t nvars) {
    FactoredRatFn f(nvars);
    long k = vexp_of(e);
    if (k == 0) return FactoredRatFn::scalar(CycRational(2), nvars);
    f.mul_brick(Monomial::v_power(k, nvars).negated());
    return f;
}

// (q^e - 1) = -(1 - q^e)
FactoredRatFn q_minus_one(const Rational& e, std::size_t nvars) {
    FactoredRatFn f(nvars);
    f.mul_coeff(CycRational(-1));
    f.mul_brick(Monomial::v_power(vexp_of(e), nvars));
    return f;
}

}  // namespace

HeckeSpec classical_spec(const ClassicalParams& p, int rank, FactoredRatFn d,
                         const std::string& label) {
    HeckeSpec s;
    s.roots = RootSystemSpec{RootFamily::B, rank};
    s.bfrak = p.bfrak;
    s.m_pair = Rational(p.bfrak);
    s.m_single_minus = Rational(p.bfrak) * p.mminus;
    s.m_single_plus = Rational(p.bfrak) * p.mplus;
    s.d = d.nvars() == std::size_t(rank) ? d : d.lifted(std::size_t(rank));
    s.label = label;
    return s;
}

HeckeSpec g2_spec() {
    HeckeSpec s;
    s.roots = RootSystemSpec{RootFamily::G2, 2};
    s.m_long = 3;
    s.m_short = 1;
    s.d = d_iwahori_g2();
    s.label = "G2(3,1)[q]";
    return s;
}

HeckeSpec f4_spec() {
    HeckeSpec s;
    s.roots = RootSystemSpec{RootFamily::F4, 4};
    s.m_long = 2;
    s.m_short = 1;
    s.d = d_iwahori_f4();
    s.label = "F4(2,1)[q]";
    return s;
}

Monomial root_value(const Root& r, const std::vector<Monomial>& coords) {
    Monomial out(coords.empty() ? 0 : coords[0].nvars());
    for (std::size_t i = 0; i < r.exps.size(); ++i)
        if (r.exps[i] != 0) out *= coords.at(i).pow(r.exps[i]);
    return out;
}

FactoredRatFn mu_without_d(const HeckeSpec& spec) {
    const std::size_t n = std::size_t(spec.rank());
    FactoredRatFn f(n);
    std::vector<Monomial> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(Monomial::var(i, n));
    for (const Root& r : positive_roots(spec.roots)) {
        Monomial a = root_value(r, coords);
        if (r.cls == RootClass::Single) {
            // (1-t)^2 (1+t)^2 / ((1+q^{m-} t)(1+q^{-m-} t)(1-q^{m+} t)(1-q^{-m+} t))
            f.mul_brick(a, 2);
            f.mul_brick(a.negated(), 2);
            const long em = vexp_of(spec.m_single_minus), ep = vexp_of(spec.m_single_plus);
            f.mul_brick((Monomial::v_power(em, n) * a).negated(), -1);
            f.mul_brick((Monomial::v_power(-em, n) * a).negated(), -1);
            f.mul_brick(Monomial::v_power(ep, n) * a, -1);
            f.mul_brick(Monomial::v_power(-ep, n) * a, -1);
        } else {
            // (1-a)^2 / ((1-q^{m} a)(1-q^{-m} a)) with m the class value
            Rational m = r.cls == RootClass::Pair ? spec.m_pair
                       : r.cls == RootClass::Long ? spec.m_long
                                                  : spec.m_short;
            f.mul_brick(a, 2);
            f.mul_brick(Monomial::v_power(vexp_of(m), n) * a, -1);
            f.mul_brick(Monomial::v_power(vexp_of(-m), n) * a, -1);
        }
    }
    return f;
}

FactoredRatFn mu(const HeckeSpec& spec) {
    FactoredRatFn f = mu_without_d(spec);
    f *= spec.d;
    return f;
}

FactoredRatFn d_zero(const Rational& mminus, const Rational& mplus) {
    FactoredRatFn f(0);
    auto product = [&f](const Rational& sum) {
        Rational a = abs(sum);
        long bound = floor_long(a);
        for (long i = 1; i <= bound; ++i) {
            // (v^{2|sum|-2i} / (1 + q^{2|sum|-2i}))^i
            FactoredRatFn term(0);
            term.mul_monomial(Monomial::v_power(vexp_of(a - i), 0));
            term *= one_plus_q(2 * a - 2 * i, 0).inverse();
            f *= term.pow(i);
        }
    };
    product(mminus - mplus);
    product(mminus + mplus);
    return f;
}

FactoredRatFn d_classical(const ClassicalParams& p, int rank) {
    FactoredRatFn f = d_zero(p.mminus, p.mplus);
    f *= v_sym_diff(p.bfrak, 0).pow(-rank);
    return f.lifted(std::size_t(rank));
}

FactoredRatFn d_target(int l, int delta_minus, int delta_plus) {
    FactoredRatFn f = v_sym_diff(1, 0).pow(-l);
    if (delta_minus * delta_plus != 0) f *= v_sym_sum(1, 0).inverse();
    return f.lifted(std::size_t(l));
}

FactoredRatFn d_iwahori_g2() {
    // 1 / ((v - v^-1)(v^3 - v^-3)) = q^2 / ((q-1)(q^3-1))
    FactoredRatFn f = v_sym_diff(1, 0).inverse();
    f *= v_sym_diff(3, 0).inverse();
    return f.lifted(2);
}

FactoredRatFn d_iwahori_f4() {
    // (v - v^-1)^-2 (v^2 - v^-2)^-2 = q^-3 (q-1)^-2 (q^2-1)^-2
    FactoredRatFn f = v_sym_diff(1, 0).pow(-2);
    f *= v_sym_diff(2, 0).pow(-2);
    return f.lifted(4);
}

FactoredRatFn cst_closed_form(const Rational& mminus, const Rational& mplus) {
    // -q^{(m- - 1/2)(m+ - 1/2)} (q-1)^{m+ - 1/2} / prod_{k=m- - m+ +1}^{m- + m+ -1} (q^k + 1)
    Rational expo = (mminus - Rational(1, 2)) * (mplus - Rational(1, 2));
    FactoredRatFn f(0);
    f.mul_coeff(CycRational(-1));
    f.mul_monomial(Monomial::v_power(vexp_of(expo), 0));
    Rational steps = mplus - Rational(1, 2);
    if (!is_integer(steps) || steps < 0) throw std::invalid_argument("cst: m+ must be in Z+1/2, m+ > 1/2");
    f *= q_minus_one(1, 0).pow(to_long(steps));
    for (Rational k = mminus - mplus + 1; k <= mminus + mplus - 1; k += 1)
        f *= one_plus_q(k, 0).inverse();
    return f;
}

FactoredRatFn cstsympl_closed_form(const Rational& mminus, const Rational& mplus) {
    // q^{m-(m+-1)} (q-1)^{2(m+-1)} /
    //   [ prod_{k=m- - m+ +2}^{m- + m+ -2} (q^k+1)^2 * (q^{m+ - m- -1}+1)(q^{m+ + m- -1}+1) ]
    FactoredRatFn f(0);
    f.mul_monomial(Monomial::v_power(vexp_of(Rational(mminus * (mplus - 1))), 0));
    Rational steps = (mplus - 1) * 2;
    if (!is_integer(steps) || steps < 0) throw std::invalid_argument("cstsympl: m+ must be a positive integer");
    f *= q_minus_one(1, 0).pow(to_long(steps));
    for (Rational k = mminus - mplus + 2; k <= mminus + mplus - 2; k += 1)
        f *= one_plus_q(k, 0).pow(-2);
    f *= one_plus_q(mplus - mminus - 1, 0).inverse();
    f *= one_plus_q(mplus + mminus - 1, 0).inverse();
    return f;
}

FactoredRatFn d_phi_chain(const Rational& mminus, const Rational& mplus, int rank) {
    if (!is_integer(Rational(mplus - Rational(1, 2))))
        throw std::invalid_argument("phi chain needs m+ in Z+1/2");
    FactoredRatFn e0(0);
    for (Rational m = mplus; m > Rational(1, 2); m -= 1) {
        long climb = to_long(Rational(m - Rational(1, 2)));  // rank gained at this step
        e0 *= v_sym_diff(1, 0).pow(-climb);
        e0 *= cst_closed_form(mminus, m);
    }
    e0 *= v_sym_diff(1, 0).pow(-rank);
    return e0.lifted(std::size_t(rank));
}

FactoredRatFn d_psi_chain(const Rational& mminus, const Rational& mplus, int rank) {
    FactoredRatFn e0(0);
    if (!is_integer(mplus)) throw std::invalid_argument("psi chain needs integer m+");
    for (Rational m = mplus; m > 1; m -= 2) {
        long climb = 2 * to_long(Rational(m - 1));
        e0 *= v_sym_diff(1, 0).pow(-climb);
        e0 *= cstsympl_closed_form(mminus, m);
    }
    e0 *= v_sym_diff(1, 0).pow(-rank);
    return e0.lifted(std::size_t(rank));
}

FactoredRatFn invert_v(const FactoredRatFn& f) {
    FactoredRatFn out(f.nvars());
    out.mul_coeff(f.coeff());
    Monomial lead = f.lead();
    lead.vexp = -lead.vexp;
    out.mul_monomial(lead);
    for (const auto& [fac, e] : f.factors()) {
        Monomial w = fac.w;
        w.vexp = -w.vexp;
        out.mul_brick(w, e);
    }
    return out;
}

}  // namespace heckemu
