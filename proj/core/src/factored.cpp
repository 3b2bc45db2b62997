#include "heckemu/factored.hpp"

#include <random>
#include <sstream>

namespace heckemu {

FactorCanon canonicalize_factor(const Monomial& w) {
    FactorCanon out;
    if (w.is_identity()) {
        out.kind = FactorCanon::Kind::Zero;
        return out;
    }
    if (w.exps_zero()) {
        out.kind = FactorCanon::Kind::Constant;
        out.constant = CycRational(1) - CycRational::zeta(w.zeta);
        return out;
    }
    out.kind = FactorCanon::Kind::Canonical;
    out.coeff_adjust = CycRational(1);
    out.lead_adjust = Monomial(w.nvars());
    if (w.lex_sign() < 0) {
        // (1 - w) = (-w) (1 - w^{-1})
        out.coeff_adjust = CycRational(-1);
        out.lead_adjust = w;
        out.factor.w = w.inverse();
    } else {
        out.factor.w = w;
    }
    return out;
}

namespace {

void split_rec(const Monomial& w, std::vector<Monomial>& out) {
    long g = w.exp_gcd();
    long n = long(zeta_order());
    for (long p = 2; p <= g; ++p) {
        if (g % p != 0) continue;
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (n % p != 0 || w.zeta % p != 0) continue;
        Monomial base = w;
        base.vexp /= p;
        for (auto& e : base.sexp) e /= p;
        for (long j = 0; j < p; ++j) {
            Monomial piece = base;
            piece.zeta = Monomial::norm_zeta(w.zeta / p + j * (n / p));
            split_rec(piece, out);
        }
        return;
    }
    out.push_back(w);
}

}  // namespace

std::vector<Monomial> primitive_split(const Monomial& w) {
    std::vector<Monomial> out;
    split_rec(w, out);
    return out;
}

FactoredRatFn FactoredRatFn::scalar(const CycRational& c, std::size_t nvars) {
    FactoredRatFn f(nvars);
    f.coeff_ = c;
    return f;
}

FactoredRatFn FactoredRatFn::from_monomial(const Monomial& m) {
    FactoredRatFn f(m.nvars());
    f.lead_ = m;
    return f;
}

bool FactoredRatFn::is_numeric() const {
    if (!lead_.is_numeric()) return false;
    for (const auto& [fac, e] : factors_)
        if (!fac.w.is_numeric()) return false;
    return true;
}

FactoredRatFn& FactoredRatFn::mul_coeff(const CycRational& c) {
    if (c.is_zero()) throw std::invalid_argument("FactoredRatFn coefficient must be nonzero");
    coeff_ *= c;
    return *this;
}

FactoredRatFn& FactoredRatFn::mul_monomial(const Monomial& m) {
    lead_ *= m;
    return *this;
}

FactoredRatFn& FactoredRatFn::mul_brick(const Monomial& w, long e) {
    if (e == 0) return *this;
    FactorCanon c = canonicalize_factor(w);
    switch (c.kind) {
        case FactorCanon::Kind::Zero:
            throw std::invalid_argument("zero brick (1-1) in FactoredRatFn");
        case FactorCanon::Kind::Constant:
            if (c.constant.is_zero()) throw std::invalid_argument("vanishing constant brick");
            return mul_coeff(c.constant.pow(e));
        case FactorCanon::Kind::Canonical:
            break;
    }
    if (!c.coeff_adjust.is_one()) mul_coeff(c.coeff_adjust.pow(e));
    if (!c.lead_adjust.is_identity()) mul_monomial(c.lead_adjust.pow(e));
    for (const Monomial& piece : primitive_split(c.factor.w)) {
        long& slot = factors_[Factor{piece}];
        slot += e;
        if (slot == 0) factors_.erase(Factor{piece});
    }
    return *this;
}

FactoredRatFn& FactoredRatFn::operator*=(const FactoredRatFn& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    coeff_ *= o.coeff_;
    lead_ *= o.lead_;
    for (const auto& [fac, e] : o.factors_) {
        long& slot = factors_[fac];
        slot += e;
        if (slot == 0) factors_.erase(fac);
    }
    return *this;
}

FactoredRatFn FactoredRatFn::inverse() const {
    FactoredRatFn out(nvars_);
    out.coeff_ = coeff_.inverse();
    out.lead_ = lead_.inverse();
    for (const auto& [fac, e] : factors_) out.factors_[fac] = -e;
    return out;
}

FactoredRatFn FactoredRatFn::pow(long k) const {
    if (k == 0) return FactoredRatFn(nvars_);
    if (k < 0) return inverse().pow(-k);
    FactoredRatFn out(nvars_);
    out.coeff_ = coeff_.pow(k);
    out.lead_ = lead_.pow(k);
    for (const auto& [fac, e] : factors_) out.factors_[fac] = e * k;
    return out;
}

FactoredRatFn FactoredRatFn::lifted(std::size_t nvars) const {
    if (!is_numeric()) throw std::logic_error("lifting a non-numeric function");
    FactoredRatFn out(nvars);
    out.coeff_ = coeff_;
    out.lead_.zeta = lead_.zeta;
    out.lead_.vexp = lead_.vexp;
    for (const auto& [fac, e] : factors_) {
        Monomial w(nvars);
        w.zeta = fac.w.zeta;
        w.vexp = fac.w.vexp;
        out.factors_[Factor{w}] = e;
    }
    return out;
}

SubstResult FactoredRatFn::substituted(const std::vector<Monomial>& map,
                                       std::size_t new_nvars) const {
    if (map.size() != nvars_) throw std::invalid_argument("substitution map size mismatch");
    for (const auto& m : map)
        if (m.nvars() != new_nvars) throw std::invalid_argument("substitution image size mismatch");
    SubstResult out{FactoredRatFn(new_nvars), 0, 0};
    out.value.coeff_ = coeff_;
    out.value.lead_ = lead_.substituted(map, new_nvars);
    for (const auto& [fac, e] : factors_) {
        Monomial w = fac.w.substituted(map, new_nvars);
        if (w.is_identity()) {
            if (e > 0) out.dropped_num += e;
            else out.dropped_den -= e;
            continue;
        }
        out.value.mul_brick(w, e);
    }
    return out;
}

CycRational FactoredRatFn::eval(const Rational& v, const std::vector<Rational>& s) const {
    CycRational out = coeff_ * lead_.eval(v, s);
    for (const auto& [fac, e] : factors_) {
        CycRational b = CycRational(1) - fac.w.eval(v, s);
        if (b.is_zero()) {
            if (e < 0) throw division_by_zero();
            return CycRational();
        }
        out *= b.pow(e);
    }
    return out;
}

std::string FactoredRatFn::str() const {
    std::ostringstream os;
    os << coeff_.str() << " * " << lead_.str();
    for (const auto& [fac, e] : factors_) {
        os << " * " << fac.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

UnitComparison compare_up_to_unit_full(const FactoredRatFn& a, const FactoredRatFn& b) {
    UnitComparison out;
    out.quotient = a * b.inverse();
    if (!out.quotient.factors().empty()) return out;
    const Monomial& lead = out.quotient.lead();
    if (!lead.is_numeric()) return out;
    CycRational total = out.quotient.coeff() * CycRational::zeta(lead.zeta);
    if (!total.is_rational()) return out;
    out.ok = true;
    out.c = total.rational_part();
    out.vexp = lead.vexp;
    return out;
}

std::optional<std::pair<Rational, long>> compare_up_to_unit(const FactoredRatFn& a,
                                                            const FactoredRatFn& b) {
    UnitComparison r = compare_up_to_unit_full(a, b);
    if (!r.ok) return std::nullopt;
    return std::make_pair(r.c, r.vexp);
}

bool random_equal(const FactoredRatFn& a, const FactoredRatFn& b, int trials, std::uint64_t seed) {
    if (a.nvars() != b.nvars()) return false;
    std::mt19937_64 rng(seed);
    auto small = [&rng](long lo, long hi) {  // inclusive; plain modulo keeps runs reproducible
        return lo + long(rng() % std::uint64_t(hi - lo + 1));
    };
    bool have_ratio = false;
    CycRational ratio;
    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) throw std::runtime_error("random_equal: cannot avoid zero set");
            Rational v(small(2, 97), small(1, 23));
            if (v <= 1) continue;
            std::vector<Rational> s;
            s.reserve(a.nvars());
            bool bad = false;
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                long num = small(-89, 89);
                if (num == 0) { bad = true; break; }
                s.emplace_back(num, small(1, 19));
            }
            if (bad) continue;
            CycRational va, vb;
            try {
                va = a.eval(v, s);
                vb = b.eval(v, s);
            } catch (const division_by_zero&) {
                continue;
            }
            if (va.is_zero() || vb.is_zero()) continue;  // on a brick's zero set
            CycRational r = va / vb;
            if (!have_ratio) {
                ratio = r;
                have_ratio = true;
            } else if (!(r == ratio)) {
                return false;
            }
            break;
        }
    }
    return true;
}

}  // namespace heckemu
