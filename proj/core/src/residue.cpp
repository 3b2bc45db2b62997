#include "heckemu/residue.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace heckemu {

std::string TorusPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

ResidueReport residue_at(const HeckeSpec& spec, const TorusPoint& point, unsigned cyclo_bound) {
    if (long(point.coords.size()) != spec.rank())
        throw std::invalid_argument("point rank does not match the root system");
    for (const auto& c : point.coords)
        if (!c.is_numeric() || c.nvars() != 0)
            throw std::invalid_argument("torus point coordinates must be numeric");
    ResidueReport rep;
    rep.point = point;
    auto sub = mu(spec).substituted(point.coords, 0);
    rep.dropped_num = sub.dropped_num;
    rep.dropped_den = sub.dropped_den;
    rep.is_residual = (sub.dropped_den - sub.dropped_num == spec.rank());
    if (rep.is_residual) rep.residue = cyclo_present(sub.value, cyclo_bound);
    return rep;
}

SignedCycloProduct residue_closed_form_phi(const Rational& mminus, const Rational& mplus) {
    return cyclo_present(cst_closed_form(mminus, mplus));
}

SignedCycloProduct residue_closed_form_psi(const Rational& mminus, const Rational& mplus) {
    return cyclo_present(cstsympl_closed_form(mminus, mplus));
}

TorusPoint phi_base_point(const Rational& mplus) {
    Rational len = mplus - Rational(1, 2);
    if (len.get_den() != 1 || len < 0) throw std::invalid_argument("phi base point needs m+ in Z+1/2");
    TorusPoint p;
    for (long i = 1; i <= len.get_num().get_si(); ++i)
        p.coords.push_back(Monomial::v_power(2 * i - 1));
    return p;
}

TorusPoint psi_base_point(const Rational& mplus) {
    if (mplus.get_den() != 1 || mplus < 1) throw std::invalid_argument("psi base point needs integer m+ >= 1");
    TorusPoint p;
    for (long i = 1; i <= 2 * (mplus.get_num().get_si() - 1); ++i)
        p.coords.push_back(Monomial::v_power(2 * (i / 2)));
    return p;
}

namespace {

// --- small exact integer linear algebra for the candidate solver ---------

using Mat = std::vector<std::vector<long>>;

long det_of(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    long out = 0, sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] != 0) {
            Mat minor(n - 1, std::vector<long>(n - 1));
            for (std::size_t r = 1; r < n; ++r) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[r - 1][cc++] = m[r][c];
                }
            }
            out += sign * m[0][j] * det_of(minor);
        }
        sign = -sign;
    }
    return out;
}

Mat adjugate(const Mat& m) {
    const std::size_t n = m.size();
    Mat adj(n, std::vector<long>(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat minor(n - 1, std::vector<long>(n - 1));
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            long cof = det_of(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;  // transpose of cofactors
        }
    return adj;
}

struct Smith {
    // U * M * V = S with U, V unimodular
    Mat u, v, s;
};

Smith smith_normal_form(Mat m) {
    const std::size_t n = m.size();
    auto identity = [n] {
        Mat id(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    };
    Smith out{identity(), identity(), {}};
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            std::size_t pi = n, pj = n;
            long best = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::labs(m[i][j]) < best)) {
                        best = std::labs(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == n) break;
            if (pi != k) { std::swap(m[k], m[pi]); std::swap(out.u[k], out.u[pi]); }
            if (pj != k)
                for (std::size_t i = 0; i < n; ++i) {
                    std::swap(m[i][k], m[i][pj]);
                    std::swap(out.v[i][k], out.v[i][pj]);
                }
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    long c = -(m[i][k] / m[k][k]);
                    for (std::size_t j = 0; j < n; ++j) {
                        m[i][j] += c * m[k][j];
                        out.u[i][j] += c * out.u[k][j];
                    }
                    if (m[i][k] != 0) clean = false;
                }
            for (std::size_t j = k + 1; j < n; ++j)
                if (m[k][j] != 0) {
                    long c = -(m[k][j] / m[k][k]);
                    for (std::size_t i = 0; i < n; ++i) {
                        m[i][j] += c * m[i][k];
                        out.v[i][j] += c * out.v[i][k];
                    }
                    if (m[k][j] != 0) clean = false;
                }
            if (clean) break;
        }
    }
    out.s = std::move(m);
    return out;
}

std::vector<long> mat_vec(const Mat& m, const std::vector<long>& x) {
    std::vector<long> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

// all solutions a in (Z/N)^n of M a == t (mod N), via the Smith form
std::vector<std::vector<long>> solve_mod(const Smith& snf, const std::vector<long>& t, long n_mod) {
    const std::size_t n = snf.s.size();
    std::vector<long> rhs = mat_vec(snf.u, t);
    std::vector<std::vector<long>> ys{{}};
    for (std::size_t i = 0; i < n; ++i) {
        long d = ((snf.s[i][i] % n_mod) + n_mod) % n_mod;
        long r = ((rhs[i] % n_mod) + n_mod) % n_mod;
        if (d == 0) d = n_mod;
        long g = std::gcd(d, n_mod);
        if (r % g != 0) return {};
        long dg = d / g, ng = n_mod / g, rg = r / g;
        long y0 = 0;
        for (long c = 0; c < std::max(1L, ng); ++c)
            if ((dg * c) % std::max(1L, ng) == 1 % std::max(1L, ng)) {
                y0 = (c * (rg % std::max(1L, ng))) % std::max(1L, ng);
                break;
            }
        std::vector<std::vector<long>> next;
        next.reserve(ys.size() * std::size_t(g));
        for (const auto& y : ys)
            for (long k = 0; k < g; ++k) {
                auto yy = y;
                yy.push_back((y0 + k * ng) % n_mod);
                next.push_back(std::move(yy));
            }
        ys = std::move(next);
    }
    std::vector<std::vector<long>> out;
    out.reserve(ys.size());
    for (const auto& y : ys) {
        auto a = mat_vec(snf.v, y);
        for (auto& x : a) x = ((x % n_mod) + n_mod) % n_mod;
        out.push_back(std::move(a));
    }
    return out;
}

// a vanishing denominator value: the coordinate value zeta^a v^e of a root
// that kills one of its denominator bricks
struct VanishValue {
    long zeta;
    long vexp;
};

std::vector<VanishValue> vanishing_values(const HeckeSpec& spec, const Root& r) {
    auto qv = [](const Rational& m) {
        Rational two = m * 2;
        if (two.get_den() != 1) throw std::logic_error("non-integral parameter exponent");
        return two.get_num().get_si();
    };
    std::vector<VanishValue> out;
    const long half = long(zeta_order()) / 2;
    switch (r.cls) {
        case RootClass::Single:
            out.push_back({0, qv(spec.m_single_plus)});
            out.push_back({0, -qv(spec.m_single_plus)});
            out.push_back({half, qv(spec.m_single_minus)});
            out.push_back({half, -qv(spec.m_single_minus)});
            break;
        case RootClass::Pair:
            out.push_back({0, qv(spec.m_pair)});
            out.push_back({0, -qv(spec.m_pair)});
            break;
        case RootClass::Long:
            out.push_back({0, qv(spec.m_long)});
            out.push_back({0, -qv(spec.m_long)});
            break;
        case RootClass::Short:
            out.push_back({0, qv(spec.m_short)});
            out.push_back({0, -qv(spec.m_short)});
            break;
    }
    std::sort(out.begin(), out.end(), [](const VanishValue& a, const VanishValue& b) {
        return std::tie(a.zeta, a.vexp) < std::tie(b.zeta, b.vexp);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const VanishValue& a, const VanishValue& b) {
                              return a.zeta == b.zeta && a.vexp == b.vexp;
                          }),
              out.end());
    return out;
}

}  // namespace

EnumerationResult enumerate_residual_points(const HeckeSpec& spec, const SearchConfig& cfg) {
    const int l = spec.rank();
    if (l > 4) throw std::invalid_argument("enumeration supports rank <= 4");
    EnumerationResult result;
    if (cfg.exp_bound >= 0) {
        result.exp_bound = cfg.exp_bound;
    } else {
        Rational maxm = 1;
        const Rational cands[] = {spec.m_single_plus, Rational(abs(spec.m_single_minus)), spec.m_pair,
                                  spec.m_long, spec.m_short};
        for (const Rational& m : cands)
            if (m > maxm) maxm = m;
        result.exp_bound = -floor_long(Rational(-2 * maxm * l - 2));  // ceil of 2*max(m)*rank + 2
    }

    auto roots = positive_roots(spec.roots);
    const long n_mod = long(zeta_order());
    const std::size_t L = std::size_t(l);

    std::set<TorusPoint> candidates;
    std::vector<std::size_t> idx(L);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t k) {
        if (k == L) {
            Mat mi(L, std::vector<long>(L, 0));
            for (std::size_t r = 0; r < L; ++r)
                for (std::size_t c = 0; c < L; ++c) mi[r][c] = roots[idx[r]].exps[c];
            long det = det_of(mi);
            if (det == 0) return;
            Mat adj = adjugate(mi);
            Smith snf = smith_normal_form(mi);
            std::vector<std::vector<VanishValue>> vals;
            for (std::size_t r = 0; r < L; ++r)
                vals.push_back(vanishing_values(spec, roots[idx[r]]));
            std::vector<std::size_t> pick(L, 0);
            while (true) {
                std::vector<long> te(L), tz(L);
                for (std::size_t r = 0; r < L; ++r) {
                    te[r] = vals[r][pick[r]].vexp;
                    tz[r] = vals[r][pick[r]].zeta;
                }
                // v-exponents by Cramer: e = adj * te / det, must be integral
                std::vector<long> ade = mat_vec(adj, te);
                bool integral = std::all_of(ade.begin(), ade.end(), [det](long x) { return x % det == 0; });
                if (integral) {
                    for (auto& x : ade) x /= det;
                    for (const auto& a : solve_mod(snf, tz, n_mod)) {
                        TorusPoint p;
                        bool in_bound = true;
                        for (std::size_t i = 0; i < L; ++i) {
                            Monomial c;
                            c.zeta = a[i];
                            c.vexp = ade[i];
                            if (std::labs(c.vexp) > result.exp_bound) in_bound = false;
                            p.coords.push_back(c);
                        }
                        if (in_bound || !cfg.apply_exp_bound) candidates.insert(std::move(p));
                        else ++result.out_of_bound;
                    }
                }
                std::size_t r = 0;
                while (r < L && ++pick[r] == vals[r].size()) pick[r++] = 0;
                if (r == L) break;
            }
            return;
        }
        for (std::size_t i = from; i + (L - k) <= roots.size(); ++i) {
            idx[k] = i;
            choose(i + 1, k + 1);
        }
    };
    choose(0, 0);

    std::set<TorusPoint> seen_orbits;
    std::vector<ResidueReport> reports;
    for (const auto& p : candidates) {
        ++result.candidates_checked;
        TorusPoint nf{orbit_normal_form(p.coords, spec.roots)};
        if (!seen_orbits.insert(nf).second) continue;
        ResidueReport rep = residue_at(spec, p, cfg.cyclo_bound);
        if (rep.is_residual) reports.push_back(std::move(rep));
    }
    result.orbits = std::move(reports);
    return result;
}

}  // namespace heckemu
