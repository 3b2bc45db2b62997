// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full battery: table reproduction, orbit enumeration,
// closed-form residues, T3 sweeps for the three morphism families, the
// induction identity, rank accounting, Weyl invariance, and oracle agreement.

#include "heckemu/tables.hpp"
#include "heckemu/transfer.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace heckemu;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << ": " << detail << "\n";
    if (!ok) ++failures;
}

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// --- criterion 1 & 2: table reproduction --------------------------------

void criterion_tables() {
    auto t0 = Clock::now();
    TableCheck t1 = check_table(WhichTable::D4_triality);
    long e1 = ms_since(t0);
    std::ostringstream d1;
    d1 << t1.rows.size() << "/4 rows, " << e1 << " ms (< 1000)";
    report("criterion 1 (Table 1, 3D4)", t1.ok && t1.rows.size() == 4 && e1 < 1000, d1.str());

    t0 = Clock::now();
    TableCheck t2 = check_table(WhichTable::E6_twisted);
    long e2 = ms_since(t0);
    int matched = 0;
    for (const auto& r : t2.rows) matched += r.match;
    std::ostringstream d2;
    d2 << matched << "/" << t2.rows.size() << " rows, " << t2.errata
       << " via documented errata (A3A1 point sign, B4(2) Phi8 exponent), " << e2
       << " ms (< 10000); the printed table has 9 rows (the prose count '8' is its own misprint)";
    report("criterion 2 (Table 2, 2E6)", t2.ok && e2 < 10000, d2.str());
}

// --- criterion 3: orbit counts -------------------------------------------

void criterion_enumeration() {
    auto t0 = Clock::now();
    auto g2 = enumerate_residual_points(g2_spec());
    report("criterion 3a (G2(3,1) orbit count = 4)", g2.orbits.size() == 4,
           std::to_string(g2.orbits.size()) + " orbits, " + std::to_string(ms_since(t0)) + " ms");

    t0 = Clock::now();
    auto f4 = enumerate_residual_points(f4_spec());
    long ef = ms_since(t0);
    // diff the found residues against the printed table rows
    std::set<std::map<long, long>> found, printed;
    for (const auto& r : f4.orbits) printed.insert(r.residue->exps);
    for (const auto& row : golden_table(WhichTable::E6_twisted)) found.insert(row.phi_exps);
    bool bijection = found == printed;
    std::ostringstream d;
    d << f4.orbits.size() << " orbits found in " << ef << " ms (< 300000); the quoted reference "
      << "count is 8, but the printed table itself lists 9 rows and the 9 found orbit residues "
      << "match those rows one-to-one"
      << (bijection ? " (bijection verified)" : " (BIJECTION FAILED)");
    report("criterion 3b (F4(2,1) orbit count = 8 as stated)", f4.orbits.size() == 8 && ef < 300000,
           d.str());
    report("criterion 3b' (found orbits biject onto the printed table rows)",
           bijection && ef < 300000, "context for 3b");
}

// --- criterion 4: closed-form residues -----------------------------------

void criterion_closed_forms() {
    bool ok = true;
    std::ostringstream d;
    for (auto [mm, mp] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1, 2), Rational(3, 2)},
             {Rational(1, 2), Rational(5, 2)},
             {Rational(3, 2), Rational(5, 2)},
             {Rational(3, 2), Rational(7, 2)}}) {
        ClassicalParams tgt = classify_params(mm, mp - 1);
        int rank = int(to_long(Rational(mp - Rational(1, 2))));
        HeckeSpec spec = classical_spec(tgt, rank, FactoredRatFn(std::size_t(rank)), "");
        auto rep = residue_at(spec, phi_base_point(mp));
        bool here = rep.is_residual && rep.residue->exps == residue_closed_form_phi(mm, mp).exps;
        ok = ok && here;
        if (!here) d << " phi(" << mm.get_str() << "," << mp.get_str() << ")";
    }
    for (auto [mm, mp] : std::vector<std::pair<Rational, Rational>>{{Rational(0), Rational(2)},
                                                                    {Rational(1), Rational(2)},
                                                                    {Rational(1), Rational(3)},
                                                                    {Rational(2), Rational(3)}}) {
        ClassicalParams tgt = classify_params(mm, mp - 2);
        int rank = int(2 * (to_long(mp) - 1));
        HeckeSpec spec = classical_spec(tgt, rank, FactoredRatFn(std::size_t(rank)), "");
        auto rep = residue_at(spec, psi_base_point(mp));
        bool here = rep.is_residual && rep.residue->exps == residue_closed_form_psi(mm, mp).exps;
        ok = ok && here;
        if (!here) d << " psi(" << mm.get_str() << "," << mp.get_str() << ")";
    }
    report("criterion 4 (closed-form residues match residue_at)", ok,
           ok ? "4 phi points + 4 psi points, exact up to unit" : ("mismatch at" + d.str()));
}

// --- criterion 5: T3 sweeps ----------------------------------------------

void criterion_sweeps() {
    auto t0 = Clock::now();
    int total = 0, passed = 0;
    std::ostringstream bad;
    auto run = [&](const Morphism& m, const std::string& tag) {
        ++total;
        T3Report rep = verify_T3(m);
        if (rep.ok) ++passed;
        else bad << " " << tag;
    };
    for (Rational mp : {Rational(3, 2), Rational(5, 2), Rational(7, 2)})
        for (Rational mm : {Rational(1, 2), Rational(3, 2)}) {
            if (mm > mp) continue;
            for (int n = 0; n <= 3; ++n)
                run(phi_stm(n, mm, mp), "phi(" + mm.get_str() + "," + mp.get_str() + ")@" + std::to_string(n));
        }
    for (long mp = 1; mp <= 3; ++mp)
        for (long mm = 0; mm <= 2; ++mm)
            for (int n = 0; n <= 3; ++n)
                run(psi_stm(n, Rational(mm), Rational(mp)),
                    "psi(" + std::to_string(mm) + "," + std::to_string(mp) + ")@" + std::to_string(n));
    for (Rational mp : {Rational(1, 4), Rational(3, 4), Rational(5, 4), Rational(7, 4)})
        for (Rational mm : {Rational(1, 4), Rational(3, 4), Rational(5, 4), Rational(7, 4)}) {
            if (mm > mp) continue;
            for (int n = 0; n <= 2; ++n)
                run(xi_stm(n, mm, mp), "xi(" + mm.get_str() + "," + mp.get_str() + ")@" + std::to_string(n));
        }
    long el = ms_since(t0);

    // negative control: a corrupted source d must fail
    Morphism controlled = psi_stm(1, Rational(1), Rational(2));
    controlled.source.d.mul_brick(Monomial::v_power(2, 1));
    bool control_fails = !verify_T3(controlled).ok;

    std::ostringstream d;
    d << passed << "/" << total << " verifications ok, " << el << " ms (< 120000), negative control "
      << (control_fails ? "fails as required" : "UNEXPECTEDLY PASSES") << bad.str();
    report("criterion 5 (T3 sweeps phi/psi/xi + negative control)",
           passed == total && el < 120000 && control_fails, d.str());
}

// --- criterion 6: induction identity --------------------------------------

void criterion_induction() {
    int total = 0, equal = 0;
    std::ostringstream bad;
    for (Rational mp : {Rational(5, 4), Rational(7, 4)})
        for (Rational mm : {Rational(1, 4), Rational(3, 4), Rational(5, 4), Rational(7, 4)}) {
            if (mm > mp) continue;
            ++total;
            InductionConstants ic = induction_constants(mm, mp);
            if (ic.equal) ++equal;
            else bad << " (" << mm.get_str() << "," << mp.get_str() << ")";
        }
    report("criterion 6 (induction constants C = A up to unit)", total == equal,
           std::to_string(equal) + "/" + std::to_string(total) + " parameter pairs" + bad.str());
}

// --- criterion 7: rank accounting ------------------------------------------

void criterion_ranks() {
    bool ok = true;
    std::ostringstream bad;
    for (Rational mp : {Rational(1, 4), Rational(3, 4), Rational(5, 4), Rational(7, 4)})
        for (Rational mm : {Rational(1, 4), Rational(3, 4), Rational(5, 4), Rational(7, 4)})
            for (int n = 0; n <= 2; ++n) {
                Morphism m = xi_stm(n, mm, mp);
                int floors = xi_target_rank(n, mm, mp);
                auto witness = xi_rank_witness(n, mm, mp);
                bool here = m.target_rank == floors && int(m.coord_map.size()) == floors &&
                            witness.has_value();
                ok = ok && here;
                if (!here) bad << " (" << mm.get_str() << "," << mp.get_str() << ")@" << n;
            }
    report("criterion 7 (xi rank accounting: closed-form witness = floors = list length)", ok,
           ok ? "16 parameter pairs x ranks 0..2" : ("mismatch at" + bad.str()));
}

// --- criterion 8: Weyl invariance -----------------------------------------

void criterion_weyl() {
    std::mt19937_64 rng(2024);
    bool ok = true;
    std::ostringstream bad;
    int tested = 0;
    // 200 seeded random type-B points of rank <= 4
    for (int trial = 0; trial < 200; ++trial) {
        int rank = 1 + int(rng() % 4);
        Rational mm(long(rng() % 5) - 1), mp(long(rng() % 4));
        ClassicalParams p = classify_params(mm, mp);
        HeckeSpec spec = classical_spec(p, rank, FactoredRatFn(std::size_t(rank)), "");
        FactoredRatFn m = mu_without_d(spec);
        std::vector<Monomial> pt;
        for (int i = 0; i < rank; ++i) {
            Monomial c;
            c.vexp = long(rng() % 9) - 4;
            c.zeta = (rng() % 2) ? 0 : 12;
            pt.push_back(c);
        }
        auto base = m.substituted(pt, 0);
        auto imgs = weyl_images(pt, spec.roots);
        for (int k = 0; k < 3; ++k) {
            const auto& img = imgs[rng() % imgs.size()];
            auto other = m.substituted(img, 0);
            bool counts = other.dropped_num == base.dropped_num && other.dropped_den == base.dropped_den;
            auto cmp = compare_up_to_unit(other.value, base.value);
            bool here = counts && cmp.has_value() && abs(cmp->first) == 1;
            ok = ok && here;
            ++tested;
            if (!here) bad << " B" << rank << "-trial" << trial;
        }
    }
    // every table point across a sample of its Weyl images
    for (auto which : {WhichTable::D4_triality, WhichTable::E6_twisted}) {
        HeckeSpec spec = table_spec(which);
        FactoredRatFn m = mu(spec);
        for (const auto& row : golden_table(which)) {
            TorusPoint p = point_from_paper(spec.roots, parse_point(row.point));
            auto base = m.substituted(p.coords, 0);
            auto imgs = weyl_images(p.coords, spec.roots);
            for (int k = 0; k < 4; ++k) {
                const auto& img = imgs[rng() % imgs.size()];
                auto other = m.substituted(img, 0);
                auto cmp = compare_up_to_unit(other.value, base.value);
                bool here = other.dropped_den == base.dropped_den &&
                            other.dropped_num == base.dropped_num && cmp.has_value();
                ok = ok && here;
                ++tested;
                if (!here) bad << " " << row.s_label;
            }
        }
    }
    // weyl_stm verifications return c = 1
    ClassicalParams p = classify_params(Rational(1), Rational(2));
    HeckeSpec spec = classical_spec(p, 3, d_psi_chain(Rational(1), Rational(2), 3), "");
    for (auto perm : std::vector<std::vector<std::pair<int, bool>>>{
             {{0, false}, {1, false}, {2, false}},
             {{2, false}, {0, false}, {1, false}},
             {{0, true}, {2, false}, {1, true}}}) {
        T3Report rep = verify_T3(weyl_stm(spec, perm));
        bool here = rep.ok && rep.c == 1;
        ok = ok && here;
        ++tested;
        if (!here) bad << " weyl_stm";
    }
    report("criterion 8 (Weyl invariance of residues; weyl_stm c = 1)", ok,
           std::to_string(tested) + " comparisons" + bad.str());
}

// --- criterion 9: oracle agreement -----------------------------------------

void criterion_oracles() {
    std::mt19937_64 rng(515);
    auto sample = [&rng](std::size_t nvars) {
        FactoredRatFn f(nvars);
        int nb = 1 + int(rng() % 6);
        for (int k = 0; k < nb; ++k) {
            Monomial w(nvars);
            w.vexp = long(rng() % 7) - 3;
            w.sexp[rng() % nvars] = 1 + long(rng() % 2);
            if (rng() % 2) w = w.negated();
            f.mul_brick(w, (rng() % 2) ? 1 : -1);
        }
        f.mul_coeff(CycRational(Rational(1 + long(rng() % 9), 1 + long(rng() % 5))));
        return f;
    };
    int agree = 0, total = 0;
    for (int pair = 0; pair < 100; ++pair) {
        FactoredRatFn a = sample(2);
        FactoredRatFn b = a;
        int kind = pair % 4;
        if (kind == 0) {  // exact scaling
            b.mul_coeff(CycRational(Rational(3, 2)));
            b.mul_monomial(Monomial::v_power(2, 2));
        } else if (kind == 1) {  // extra brick near-miss
            Monomial w(2);
            w.sexp[0] = 1;
            b.mul_brick(w.negated());
        } else if (kind == 2) {  // near-miss in a single exponent
            Monomial w(2);
            w.vexp = 2;
            w.sexp[1] = 1;
            b.mul_brick(w, 1);
            Monomial w2 = w;
            w2.vexp = 4;
            a.mul_brick(w2, 1);
        } else {  // plain equality
        }
        ++total;
        auto cmp = compare_up_to_unit(a, b);
        bool agreed;
        if (cmp.has_value()) {
            FactoredRatFn scaled = b;
            scaled.mul_coeff(CycRational(cmp->first));
            scaled.mul_monomial(Monomial::v_power(cmp->second, 2));
            agreed = random_equal(a, scaled, 100, 7000 + std::uint64_t(pair));
        } else {
            agreed = !random_equal(a, b, 100, 9000 + std::uint64_t(pair));
        }
        agree += agreed;
    }
    report("criterion 9 (factored vs randomized oracle agreement)", agree == total,
           std::to_string(agree) + "/" + std::to_string(total) +
               " pairs (100 seeded trials each, scalings and engineered near-misses)");
}

}  // namespace

int main() {
    std::cout << "acceptance suite (zeta order " << zeta_order() << ")\n";
    auto t0 = Clock::now();
    criterion_tables();
    criterion_enumeration();
    criterion_closed_forms();
    criterion_sweeps();
    criterion_induction();
    criterion_ranks();
    criterion_weyl();
    criterion_oracles();
    std::cout << (failures ? "RESULT: " + std::to_string(failures) + " criterion check(s) failed"
                           : "RESULT: all criteria passed")
              << " (" << ms_since(t0) << " ms total)\n";
    if (failures == 1) {
        std::cout << "note: the single expected failure is criterion 3b; the quoted count of "
                     "eight residual orbits contradicts the nine-row table it accompanies, and "
                     "the enumeration reproduces that table exactly (see 3b')\n";
    }
    return failures == 0 ? 0 : 1;
}
