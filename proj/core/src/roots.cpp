#include "heckemu/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace heckemu {

namespace {

// doubled Gram matrices (alpha_i, alpha_j) * 2, and squared lengths * 2,
// chosen so long/short ratios are 3 (G2) and 2 (F4)
struct CartanData {
    int rank;
    std::vector<std::vector<long>> gram2;
};

CartanData cartan_data(RootFamily f) {
    if (f == RootFamily::G2)  // (short, long): |s|^2 = 2, |l|^2 = 6, (s,l) = -3
        return {2, {{4, -6}, {-6, 12}}};
    // F4 Bourbaki: a1, a2 long (|.|^2 = 2), a3, a4 short (|.|^2 = 1)
    return {4,
            {{4, -2, 0, 0},
             {-2, 4, -2, 0},
             {0, -2, 2, -1},
             {0, 0, -1, 2}}};
}

long pairing2(const CartanData& cd, const std::vector<long>& beta, int i) {
    // 2 * 2(beta, a_i) / (a_i, a_i) given doubled gram: returns <beta, a_i^vee>
    long num = 0;
    for (int j = 0; j < cd.rank; ++j) num += beta[std::size_t(j)] * cd.gram2[std::size_t(j)][std::size_t(i)];
    long den = cd.gram2[std::size_t(i)][std::size_t(i)];
    if ((2 * num) % den != 0) throw std::logic_error("non-integral Cartan pairing");
    return 2 * num / den;
}

long norm2x2(const CartanData& cd, const std::vector<long>& beta) {
    long out = 0;
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j)
            out += beta[std::size_t(i)] * beta[std::size_t(j)] * cd.gram2[std::size_t(i)][std::size_t(j)];
    return out;
}

std::vector<Root> exceptional_positive_roots(RootFamily f) {
    CartanData cd = cartan_data(f);
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> frontier;
    for (int i = 0; i < cd.rank; ++i) {
        std::vector<long> e(std::size_t(cd.rank), 0);
        e[std::size_t(i)] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    // closure: beta + a_i is a root iff p - <beta, a_i^vee> > 0, with p the
    // depth of the a_i-string below beta
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < cd.rank; ++i) {
                long p = 0;
                std::vector<long> down = beta;
                while (true) {
                    down[std::size_t(i)] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(), [](long x) { return x >= 0; });
                    if (!nonneg || !roots.count(down)) break;
                    ++p;
                }
                if (p - pairing2(cd, beta, i) > 0) {
                    std::vector<long> up = beta;
                    up[std::size_t(i)] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    long min2 = 0;
    for (const auto& r : roots) {
        long n2 = norm2x2(cd, r);
        if (min2 == 0 || n2 < min2) min2 = n2;
    }
    std::vector<Root> out;
    for (const auto& r : roots)
        out.push_back(Root{r, norm2x2(cd, r) == min2 ? RootClass::Short : RootClass::Long});
    return out;
}

}  // namespace

const char* family_name(RootFamily f) {
    switch (f) {
        case RootFamily::A: return "A";
        case RootFamily::B: return "B";
        case RootFamily::D: return "D";
        case RootFamily::G2: return "G2";
        case RootFamily::F4: return "F4";
    }
    return "?";
}

std::vector<Root> positive_roots(const RootSystemSpec& spec) {
    const int l = spec.rank;
    std::vector<Root> out;
    auto coord = [&](int i, long e) {
        std::vector<long> v(std::size_t(l), 0);
        v[std::size_t(i)] = e;
        return v;
    };
    switch (spec.family) {
        case RootFamily::A:
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    auto v = coord(i, 1);
                    v[std::size_t(j)] = -1;
                    out.push_back(Root{v, RootClass::Pair});
                }
            return out;
        case RootFamily::B:
            for (int i = 0; i < l; ++i) out.push_back(Root{coord(i, 1), RootClass::Single});
            [[fallthrough]];
        case RootFamily::D:
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    auto v = coord(i, 1);
                    v[std::size_t(j)] = -1;
                    out.push_back(Root{v, RootClass::Pair});
                    v[std::size_t(j)] = 1;
                    out.push_back(Root{v, RootClass::Pair});
                }
            return out;
        case RootFamily::G2:
            if (l != 2) throw std::invalid_argument("G2 requires rank 2");
            return exceptional_positive_roots(spec.family);
        case RootFamily::F4:
            if (l != 4) throw std::invalid_argument("F4 requires rank 4");
            return exceptional_positive_roots(spec.family);
    }
    throw std::invalid_argument("unknown root family");
}

const std::vector<std::vector<std::vector<long>>>& weyl_matrices(RootFamily family) {
    static std::mutex mu;
    static std::map<RootFamily, std::vector<std::vector<std::vector<long>>>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(family);
    if (it != cache.end()) return it->second;
    CartanData cd = cartan_data(family);
    const int l = cd.rank;
    using Mat = std::vector<std::vector<long>>;
    auto identity = [&] {
        Mat m(std::size_t(l), std::vector<long>(std::size_t(l), 0));
        for (int i = 0; i < l; ++i) m[std::size_t(i)][std::size_t(i)] = 1;
        return m;
    };
    // s_i acting on simple-root coordinates (column j = image of alpha_j)
    std::vector<Mat> gens;
    for (int i = 0; i < l; ++i) {
        Mat m = identity();
        for (int j = 0; j < l; ++j) {
            std::vector<long> ej(std::size_t(l), 0);
            ej[std::size_t(j)] = 1;
            long c = pairing2(cd, ej, i);
            m[std::size_t(i)][std::size_t(j)] -= c;
        }
        gens.push_back(m);
    }
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat m(std::size_t(l), std::vector<long>(std::size_t(l), 0));
        for (int i = 0; i < l; ++i)
            for (int k = 0; k < l; ++k) {
                if (a[std::size_t(i)][std::size_t(k)] == 0) continue;
                for (int j = 0; j < l; ++j)
                    m[std::size_t(i)][std::size_t(j)] +=
                        a[std::size_t(i)][std::size_t(k)] * b[std::size_t(k)][std::size_t(j)];
            }
        return m;
    };
    std::set<Mat> seen{identity()};
    std::vector<Mat> frontier{identity()};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                Mat p = mul(g, m);
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    auto& slot = cache[family];
    slot.assign(seen.begin(), seen.end());
    return slot;
}

namespace {

std::vector<Monomial> apply_weyl(const std::vector<Monomial>& point,
                                 const std::vector<std::vector<long>>& m) {
    // coordinate j of the image is the value of the j-th simple root after
    // the action: prod_k point_k ^ m[k][j]
    std::vector<Monomial> out;
    const std::size_t l = point.size();
    for (std::size_t j = 0; j < l; ++j) {
        Monomial c(point[0].nvars());
        for (std::size_t k = 0; k < l; ++k)
            if (m[k][j] != 0) c *= point[k].pow(m[k][j]);
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Monomial>> weyl_images(const std::vector<Monomial>& point,
                                               const RootSystemSpec& spec) {
    std::set<std::vector<Monomial>> seen;
    if (spec.family == RootFamily::G2 || spec.family == RootFamily::F4) {
        for (const auto& m : weyl_matrices(spec.family)) seen.insert(apply_weyl(point, m));
    } else {
        // hyperoctahedral action: permutations and inversions of coordinates
        std::vector<std::size_t> perm(point.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        const std::size_t l = point.size();
        do {
            for (std::size_t signs = 0; signs < (std::size_t(1) << l); ++signs) {
                if (spec.family == RootFamily::D) {
                    // D-type flips come in pairs; B allows all
                    std::size_t bits = signs, cnt = 0;
                    while (bits) { cnt += bits & 1; bits >>= 1; }
                    if (cnt % 2 != 0) continue;
                }
                std::vector<Monomial> img;
                img.reserve(l);
                for (std::size_t i = 0; i < l; ++i) {
                    Monomial c = point[perm[i]];
                    if ((signs >> i) & 1) c = c.inverse();
                    img.push_back(c);
                }
                seen.insert(std::move(img));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {seen.begin(), seen.end()};
}

std::vector<Monomial> orbit_normal_form(const std::vector<Monomial>& point,
                                        const RootSystemSpec& spec) {
    if (spec.family == RootFamily::G2 || spec.family == RootFamily::F4) {
        auto imgs = weyl_images(point, spec);
        return imgs.front();  // set order = lexicographic minimum
    }
    std::vector<Monomial> out = point;
    for (auto& c : out) {
        Monomial inv = c.inverse();
        if (inv < c) c = inv;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace heckemu
