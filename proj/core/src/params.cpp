#include "heckemu/params.hpp"

#include <set>

namespace heckemu {

namespace {

bool in_half_z(const Rational& r) { return is_integer(Rational(r * 2)); }
bool in_quarter_only(const Rational& r) {  // Z +- 1/4
    return is_integer(Rational(r * 4)) && !in_half_z(r);
}

}  // namespace

QuarterData quarter_data(const Rational& m) {
    Rational a = abs(m);
    if (!in_quarter_only(a)) throw std::invalid_argument("quarter_data requires m in Z +- 1/4");
    // |m| = kappa + (2 eps - 1)/4
    Rational frac = a - Rational(a.get_num() / a.get_den());  // in {1/4, 3/4}
    QuarterData q{};
    if (frac == Rational(1, 4)) {
        q.eps = 1;
        q.kappa = int(mpz_class(a.get_num() / a.get_den()).get_si());
    } else {
        q.eps = 0;
        q.kappa = int(mpz_class(a.get_num() / a.get_den()).get_si()) + 1;
    }
    q.delta = q.kappa % 2;
    return q;
}

ClassicalParams classify_params(const Rational& mminus_in, const Rational& mplus_in) {
    const Rational mminus = reduced(mminus_in), mplus = reduced(mplus_in);
    if (!is_integer(Rational(mminus * 4)) || !is_integer(Rational(mplus * 4)))
        throw std::invalid_argument("parameters must lie in (1/4)Z");
    ClassicalParams p;
    p.mminus = mminus;
    p.mplus = mplus;
    p.bfrak = (is_integer(Rational(mplus + mminus)) && is_integer(Rational(mplus - mminus))) ? 1 : 2;

    const bool half_m = in_half_z(mminus), half_p = in_half_z(mplus);
    if (half_m && half_p) {
        const bool int_m = is_integer(mminus), int_p = is_integer(mplus);
        Rational diff = mminus - mplus;
        if (!int_m || !int_p) {
            if (is_integer(diff)) p.cls = 2;          // both in Z + 1/2
            else p.cls = 1;                            // mixed halves
        } else {
            p.cls = is_integer(Rational(diff / 2)) ? 4 : 3;      // even vs odd difference
        }
        return p;
    }
    if (in_quarter_only(mminus) && in_quarter_only(mplus)) {
        QuarterData qm = quarter_data(mminus), qp = quarter_data(mplus);
        p.kappa_m = qm.kappa;
        p.eps_m = qm.eps;
        p.delta_m = qm.delta;
        p.kappa_p = qp.kappa;
        p.eps_p = qp.eps;
        p.delta_p = qp.delta;
        p.cls = (qm.delta != qp.delta) ? 5 : 6;
        return p;
    }
    throw std::invalid_argument("parameters mix quarter- and half-integers");
}

std::pair<Rational, Rational> iso_apply(const std::pair<Rational, Rational>& m,
                                        const std::vector<IsoGen>& word) {
    Rational mm = m.first, mp = m.second;
    for (IsoGen g : word) {
        if (g == IsoGen::EtaPlus) mp = -mp;
        else std::swap(mm, mp);
    }
    return {mm, mp};
}

ClassicalParams iso_apply(const ClassicalParams& p, const std::vector<IsoGen>& word) {
    auto [mm, mp] = iso_apply(std::make_pair(p.mminus, p.mplus), word);
    return classify_params(mm, mp);
}

std::vector<std::pair<Rational, Rational>> iso_orbit(const std::pair<Rational, Rational>& m) {
    std::set<std::pair<Rational, Rational>> seen{m};
    std::vector<std::pair<Rational, Rational>> frontier{m};
    while (!frontier.empty()) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& x : frontier)
            for (auto g : {IsoGen::EtaPlus, IsoGen::Eta}) {
                auto y = iso_apply(x, {g});
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace heckemu
