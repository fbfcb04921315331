#include "qgrass/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgrass/ring.hpp"

namespace qgrass {

CMatrix operator_matrix(Kind kind, int n, const StrictPartition& lam) {
    const EvaluationTables& tables = evaluation_tables(kind, n);
    const int count = static_cast<int>(tables.basis.size());
    const int a = tables.basis_index(lam);
    CMatrix out(count, count);
    for (int col = 0; col < count; ++col)
        for (const StructureTerm& t : tables.pair_product(a, col))
            out(tables.basis_index(t.nu), col) += static_cast<double>(t.coeff);
    return out;
}

std::vector<EigenPair> eigenpairs(Kind kind, int n, const StrictPartition& lam) {
    const EvaluationTables& tables = evaluation_tables(kind, n);
    const int count = static_cast<int>(tables.basis.size());
    const int a = tables.basis_index(lam);
    std::vector<EigenPair> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        EigenPair p;
        p.point_index = i;
        p.value = tables.m(i, a);
        p.vec.resize(static_cast<size_t>(count));
        for (int mu = 0; mu < count; ++mu)
            p.vec[static_cast<size_t>(mu)] =
                tables.m(i, tables.complement_index[static_cast<size_t>(mu)]);
        out.push_back(std::move(p));
    }
    return out;
}

int fano_index(Kind kind, int n) {
    return kind == Kind::og ? 2 * n : n + 1;
}

std::vector<Cplx> c1_spectrum(Kind kind, int n) {
    const double factor = (kind == Kind::og) ? n : n + 1;
    std::vector<Cplx> out;
    for (const PetersonPoint& p : peterson_points(kind, n))
        out.push_back(factor * p.generators()[0]);
    return out;
}

ConjectureOReport conjecture_o(Kind kind, int n, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    std::vector<Cplx> values = c1_spectrum(kind, n);

    double t0 = 0.0;
    for (Cplx v : values) t0 = std::max(t0, std::abs(v));
    const double thr = tol * std::max(1.0, t0);

    // Greedy clustering against running centroids; eigenvalue gaps are
    // O(1) while thr is tiny, so the outcome does not depend on order.
    std::vector<Cplx> sums;
    std::vector<int> counts;
    for (Cplx v : values) {
        bool placed = false;
        for (size_t c = 0; c < sums.size(); ++c) {
            if (std::abs(v - sums[c] / static_cast<double>(counts[c])) <= thr) {
                sums[c] += v;
                ++counts[c];
                placed = true;
                break;
            }
        }
        if (!placed) {
            sums.push_back(v);
            counts.push_back(1);
        }
    }

    ConjectureOReport report;
    report.kind = kind;
    report.n = n;
    report.fano = fano_index(kind, n);
    report.t0 = t0;
    report.indeterminate = false;
    for (size_t c = 0; c < sums.size(); ++c)
        report.spectrum.push_back(
            SpectralCluster{sums[c] / static_cast<double>(counts[c]), counts[c]});
    std::sort(report.spectrum.begin(), report.spectrum.end(),
              [](const SpectralCluster& a, const SpectralCluster& b) {
                  double ma = std::abs(a.value), mb = std::abs(b.value);
                  if (std::abs(ma - mb) > 1e-15 * std::max(ma, mb)) return ma > mb;
                  return std::arg(a.value) < std::arg(b.value);
              });

    for (size_t a = 0; a < report.spectrum.size(); ++a)
        for (size_t b = a + 1; b < report.spectrum.size(); ++b) {
            double d = std::abs(report.spectrum[a].value - report.spectrum[b].value);
            if (d > thr && d <= 10.0 * thr) {
                report.indeterminate = true;
                report.note = "cluster separation within 10x of the tolerance";
            }
        }

    const SpectralCluster* top = nullptr;
    report.max_modulus_count = 0;
    report.cond2 = true;
    for (const SpectralCluster& c : report.spectrum) {
        if (std::abs(std::abs(c.value) - t0) > thr) continue;
        ++report.max_modulus_count;
        if (std::abs(c.value.imag()) <= thr && c.value.real() > 0.0 && !top) top = &c;
        double best = t0;
        for (int k = 0; k < report.fano; ++k) {
            Cplx root = t0 * std::polar(1.0, 2.0 * std::numbers::pi * k / report.fano);
            best = std::min(best, std::abs(c.value - root));
        }
        if (best > thr) report.cond2 = false;
    }
    report.cond1 = top != nullptr;
    report.cond3 = top != nullptr && top->multiplicity == 1;
    return report;
}

}  // namespace qgrass
