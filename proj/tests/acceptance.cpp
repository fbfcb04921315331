// Acceptance suite.  Each criterion prints exactly one [PASS]/[FAIL] line;
// the exit code is the number of failed criteria.  Tolerances are fixed
// here on purpose: these are the contract, not tunables.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qgrass/partition.hpp"
#include "qgrass/peterson.hpp"
#include "qgrass/ring.hpp"
#include "qgrass/spectral.hpp"
#include "qgrass/symfun.hpp"

using namespace qgrass;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", index, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }

bool multiset_close(std::vector<Cplx> got, const std::vector<Cplx>& want, double tol) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(want.size(), false);
    for (const Cplx& g : got) {
        size_t at = want.size();
        double best = tol;
        for (size_t i = 0; i < want.size(); ++i)
            if (!used[i] && std::abs(g - want[i]) <= best) {
                best = std::abs(g - want[i]);
                at = i;
            }
        if (at == want.size()) return false;
        used[at] = true;
    }
    return true;
}

// ---- 1: orthogonality of the evaluation tables, with a time budget ----

void criterion_orthogonality() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (Kind kind : {Kind::og, Kind::lg})
        for (int n = 2; n <= 6; ++n) {
            const EvaluationTables& t = evaluation_tables(kind, n);
            const int count = static_cast<int>(t.basis.size());
            const double weight =
                (kind == Kind::og) ? 1.0 : std::pow(t.points.front().scale(), n + 1.0);
            const double factor = (kind == Kind::og) ? 1.0 : std::ldexp(1.0, n);
            double scale = 0.0;
            for (int i = 0; i < count; ++i)
                scale = std::max(scale, factor * std::abs(t.schur_values[size_t(i)]));
            for (int i = 0; i < count; ++i)
                for (int j = 0; j < count; ++j) {
                    Cplx sum{};
                    for (int l = 0; l < count; ++l)
                        sum += t.m(i, l) * t.m(j, t.complement_index[size_t(l)]);
                    sum *= weight;
                    if (i == j) sum -= factor * t.schur_values[size_t(i)];
                    worst = std::max(worst, std::abs(sum) / scale);
                }
        }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                     start).count();
    report(1, "peterson-orthogonality", worst <= 1e-8 && sec < 10.0,
           "max relative residual " + num(worst) + " over og/lg ranks 2..6 in " +
               num(sec) + "s (budget 10s)");
}

// ---- 2: the key identity dichotomy under random signed permutations ----

void criterion_key_identity() {
    std::mt19937 rng(20260819);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    double worst = 0.0;
    int trials = 0;
    for (int m = 2; m <= 5; ++m) {
        std::vector<int> rho(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) rho[size_t(i)] = m - i;
        for (int trial = 0; trial < 100; ++trial, ++trials) {
            PointTuple x(static_cast<size_t>(m));
            for (auto& c : x) c = Cplx(box(rng), box(rng));

            std::vector<int> entries(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) entries[size_t(i)] = i + 1;
            std::shuffle(entries.begin(), entries.end(), rng);
            const bool barred = trial % 2 == 1;
            if (barred) {
                for (int& e : entries)
                    if (coin(rng)) e = -e;
                bool any = false;
                for (int e : entries) any = any || e < 0;
                if (!any) entries[0] = -entries[0];
            }

            Cplx sum = key_identity_sum(SignedPermutation(entries), x);
            Cplx want = barred ? Cplx{} : schur(rho, x);
            double scale = std::max(1.0, std::abs(schur(rho, x)));
            worst = std::max(worst, std::abs(sum - want) / scale);
        }
    }
    report(2, "key-identity-dichotomy", worst <= 1e-8,
           "max scaled deviation " + num(worst) + " over " + std::to_string(trials) +
               " random (w, x) draws, sizes 2..5");
}

// ---- 3: structure constants integral, nonnegative, commutative, associative ----

void criterion_structure_constants() {
    std::mt19937 rng(31415);
    long long pairs = 0, triples = 0;
    std::string issue;
    try {
        for (Kind kind : {Kind::og, Kind::lg})
            for (int n = 2; n <= 5 && issue.empty(); ++n) {
                const EvaluationTables& t = evaluation_tables(kind, n);
                const int count = static_cast<int>(t.basis.size());
                for (int a = 0; a < count && issue.empty(); ++a)
                    for (int b = 0; b <= a; ++b) {
                        const auto& ab = t.pair_product(a, b);
                        ++pairs;
                        if (!(ab == t.pair_product(b, a))) {
                            issue = "commutativity broke at " +
                                    t.basis[size_t(a)].to_string() + " * " +
                                    t.basis[size_t(b)].to_string();
                            break;
                        }
                        for (const StructureTerm& term : ab)
                            if (term.coeff <= 0 || term.q < 0) {
                                issue = "bad term in " + t.basis[size_t(a)].to_string() +
                                        " * " + t.basis[size_t(b)].to_string();
                                break;
                            }
                    }
                std::uniform_int_distribution<size_t> pick(0, t.basis.size() - 1);
                for (int trial = 0; trial < 200 && issue.empty(); ++trial, ++triples) {
                    RingElement a = RingElement::basis(kind, n, t.basis[pick(rng)]);
                    RingElement b = RingElement::basis(kind, n, t.basis[pick(rng)]);
                    RingElement c = RingElement::basis(kind, n, t.basis[pick(rng)]);
                    if (!((a * b) * c == a * (b * c))) {
                        issue = "associativity broke at rank " + std::to_string(n);
                        break;
                    }
                }
            }
    } catch (const std::exception& e) {
        issue = e.what();
    }
    report(3, "structure-constants", issue.empty(),
           issue.empty() ? std::to_string(pairs) + " basis pairs integral and symmetric, " +
                               std::to_string(triples) + " random triples associative"
                         : issue);
}

// ---- 4: presentations and Giambelli identities recomputed exactly ----

void criterion_presentations() {
    int checked = 0;
    std::string issue;
    for (Kind kind : {Kind::og, Kind::lg})
        for (int n = 2; n <= 5; ++n) {
            PresentationReport rep = verify_presentation(kind, n);
            checked += rep.checked;
            if (!rep.ok() && issue.empty()) issue = rep.violations.front();
        }
    report(4, "ring-presentations", issue.empty(),
           issue.empty() ? std::to_string(checked) + " identities hold with integer equality"
                         : issue);
}

// ---- 5: hand-checked products ----

void criterion_known_products() {
    using Terms = std::vector<StructureTerm>;
    struct Case {
        Kind kind;
        int n;
        std::vector<int> a, b;
        Terms want;
    };
    const std::vector<Case> cases = {
        {Kind::og, 2, {1}, {1}, Terms{{sp({2}), 0, 1}}},
        {Kind::og, 2, {2}, {2}, Terms{{sp({}), 1, 1}}},
        {Kind::og, 2, {2}, {2, 1}, Terms{{sp({1}), 1, 1}}},
        {Kind::lg, 2, {1}, {1}, Terms{{sp({2}), 0, 2}}},
        {Kind::lg, 2, {2}, {1}, Terms{{sp({}), 1, 1}, {sp({2, 1}), 0, 1}}},
        {Kind::lg, 2, {2}, {2}, Terms{{sp({1}), 1, 1}}},
    };
    std::string issue;
    for (const Case& c : cases) {
        Terms got = structure_constants(c.kind, c.n, sp(c.a), sp(c.b));
        Terms swapped = structure_constants(c.kind, c.n, sp(c.b), sp(c.a));
        if (!(got == c.want) || !(swapped == c.want)) {
            issue = std::string(kind_name(c.kind)) + " " + sp(c.a).to_string() + " * " +
                    sp(c.b).to_string() + " came out wrong";
            break;
        }
    }
    if (issue.empty())
        for (int n = 2; n <= 5; ++n) {
            Terms want{{sp({}), 1, 1}};
            if (!(structure_constants(Kind::og, n, sp({n}), sp({n})) == want)) {
                issue = "og top one-row square at rank " + std::to_string(n);
                break;
            }
        }
    report(5, "known-products", issue.empty(),
           issue.empty() ? "rank-2 tables and the og top-row squares match hand values"
                         : issue);
}

// ---- 6: closed-form spectra ----

void criterion_spectra() {
    bool ok = true;
    std::string issue;

    if (!multiset_close(c1_spectrum(Kind::og, 2),
                        {Cplx(4, 0), Cplx(0, 4), Cplx(-4, 0), Cplx(0, -4)}, 1e-9)) {
        ok = false;
        issue = "og rank 2 spectrum";
    }
    const double d = lg_scale(2);
    if (ok && !multiset_close(c1_spectrum(Kind::lg, 2),
                              {6 * d, 6 * d * std::polar(1.0, 2 * std::numbers::pi / 3),
                               6 * d * std::polar(1.0, -2 * std::numbers::pi / 3), 0.0},
                              1e-9)) {
        ok = false;
        issue = "lg rank 2 spectrum";
    }
    double worst = 0.0;
    if (ok)
        for (int n = 2; n <= 8; ++n) {
            const double want =
                n * std::pow(4.0, 0.5 / n) / std::sin(std::numbers::pi / (2 * n));
            const double got = std::abs(c1_spectrum(Kind::og, n)[0] - want) / want;
            worst = std::max(worst, got);
            if (got > 1e-10) {
                ok = false;
                issue = "og base value at rank " + std::to_string(n);
            }
        }
    report(6, "spectra-closed-forms", ok,
           ok ? "rank-2 multisets exact to 1e-9; og base values within " + num(worst) +
                    " relative for ranks 2..8"
              : issue);
}

// ---- 7: closed-form eigenpairs diagonalize every operator at once ----

void criterion_eigenpairs() {
    double worst = 0.0;
    bool shared = true;
    for (Kind kind : {Kind::og, Kind::lg})
        for (int n = 2; n <= 5; ++n) {
            const EvaluationTables& t = evaluation_tables(kind, n);
            const int count = static_cast<int>(t.basis.size());
            auto base = eigenpairs(kind, n, StrictPartition{});
            for (const StrictPartition& lam : t.basis) {
                CMatrix a = operator_matrix(kind, n, lam);
                const double anorm = inf_norm(a);
                auto ps = eigenpairs(kind, n, lam);
                for (int i = 0; i < count; ++i) {
                    shared = shared && ps[size_t(i)].vec == base[size_t(i)].vec;
                    double vmax = 0.0;
                    for (Cplx c : ps[size_t(i)].vec) vmax = std::max(vmax, std::abs(c));
                    double resid = 0.0;
                    for (int r = 0; r < count; ++r) {
                        Cplx acc = -ps[size_t(i)].value * ps[size_t(i)].vec[size_t(r)];
                        for (int c = 0; c < count; ++c)
                            acc += a(r, c) * ps[size_t(i)].vec[size_t(c)];
                        resid = std::max(resid, std::abs(acc));
                    }
                    worst = std::max(worst, resid / (anorm * vmax));
                }
            }
        }
    report(7, "eigenpair-residuals", worst <= 1e-8 && shared,
           shared ? "max scaled residual " + num(worst) +
                        " across every class of og/lg ranks 2..5, one shared eigenbasis"
                  : "eigenvectors differ between classes");
}

// ---- 8: the three spectral conditions at every rank ----

void criterion_conjecture_o() {
    std::string issue;
    for (Kind kind : {Kind::og, Kind::lg})
        for (int n = 2; n <= 8; ++n) {
            ConjectureOReport rep = conjecture_o(kind, n);
            if (!(rep.pass() && rep.max_modulus_count == rep.fano)) {
                issue = std::string(kind_name(kind)) + " rank " + std::to_string(n) +
                        (rep.indeterminate ? " indeterminate" : " failed");
                break;
            }
        }
    report(8, "conjecture-o", issue.empty(),
           issue.empty() ? "holds with extremal census = Fano index, og/lg ranks 2..8"
                         : issue);
}

// ---- 9: the quantum Euler class against the normalizers ----

void criterion_euler() {
    double worst = 0.0, least = 1e300;
    for (Kind kind : {Kind::og, Kind::lg})
        for (int n = 2; n <= 6; ++n) {
            const EvaluationTables& t = evaluation_tables(kind, n);
            RingElement e = quantum_euler(kind, n);
            const double factor = (kind == Kind::og) ? 1.0 : std::ldexp(1.0, n + 1);
            for (int i = 0; i < static_cast<int>(t.points.size()); ++i) {
                Cplx v = evaluate_at_point(e, i);
                Cplx want = factor * t.schur_values[size_t(i)];
                worst = std::max(worst, std::abs(v - want) / std::abs(want));
                least = std::min(least, std::abs(v));
            }
        }
    report(9, "quantum-euler", worst <= 1e-8 && least > 1e-6,
           "values match the normalizers within " + num(worst) +
               " relative and stay above " + num(least) + " in modulus, ranks 2..6");
}

// ---- 10: the Peterson point suite ----

void criterion_points() {
    std::string issue;
    double worst_q = 0.0, worst_band = 0.0, worst_power = 0.0;
    for (int n = 2; n <= 8 && issue.empty(); ++n) {
        auto all = enumerate_exclusive(n);
        int closed = 0;
        for (const auto& t : all) closed += t.is_closed();
        if (closed != 2 * n) issue = "closed census at order " + std::to_string(n);
        int closed_even = 0;
        for (const auto& t : enumerate_exclusive(n + 1))
            closed_even += t.is_closed() && t.parity() == Parity::even;
        if (closed_even != n + 1 && issue.empty())
            issue = "closed even census at order " + std::to_string(n + 1);

        for (Kind kind : {Kind::og, Kind::lg}) {
            auto pts = peterson_points(kind, n);
            if (pts.size() != (size_t(1) << n)) {
                issue = "point count " + std::string(kind_name(kind)) + " rank " +
                        std::to_string(n);
                break;
            }
            for (const PetersonPoint& p : pts) {
                worst_q = std::max(worst_q, std::abs(evaluate_q(p) - 1.0));
                worst_band = std::max(worst_band, band_relation_residual(p));
                PowerCheck pc = exclusive_power_check(p.tuple());
                worst_power = std::max({worst_power, pc.max_elementary, pc.top_square});
            }
        }
    }
    bool ok = issue.empty() && worst_q <= 1e-10 && worst_band <= 1e-9 &&
              worst_power <= 1e-10;
    report(10, "point-suite", ok,
           issue.empty() ? "censuses exact; residuals q " + num(worst_q) + ", band " +
                               num(worst_band) + ", powers " + num(worst_power) +
                               " over og/lg ranks 2..8"
                         : issue);
}

}  // namespace

int main() {
    criterion_orthogonality();
    criterion_key_identity();
    criterion_structure_constants();
    criterion_presentations();
    criterion_known_products();
    criterion_spectra();
    criterion_eigenpairs();
    criterion_conjecture_o();
    criterion_euler();
    criterion_points();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
