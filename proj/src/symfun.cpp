#include "qgrass/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgrass {

std::vector<Cplx> elementary_table(const PointTuple& x) {
    // Incremental product of (1 + x_k t): after each factor the coefficient
    // list holds the elementary polynomials of the prefix.
    std::vector<Cplx> e(x.size() + 1, Cplx{});
    e[0] = 1.0;
    size_t used = 0;
    for (Cplx xi : x) {
        ++used;
        for (size_t i = used; i >= 1; --i) e[i] += xi * e[i - 1];
    }
    return e;
}

Cplx elementary(int i, const PointTuple& x) {
    if (i < 0 || i > static_cast<int>(x.size())) return Cplx{};
    return elementary_table(x)[static_cast<size_t>(i)];
}

std::vector<Cplx> complete_table(std::span<const Cplx> elem, int upto) {
    const int m = static_cast<int>(elem.size()) - 1;
    std::vector<Cplx> h(static_cast<size_t>(upto) + 1, Cplx{});
    h[0] = 1.0;
    for (int i = 1; i <= upto; ++i) {
        Cplx s{};
        for (int k = 1; k <= std::min(i, m); ++k) {
            Cplx term = elem[static_cast<size_t>(k)] * h[static_cast<size_t>(i - k)];
            s += (k % 2) ? term : -term;
        }
        h[static_cast<size_t>(i)] = s;
    }
    return h;
}

Cplx complete(int i, const PointTuple& x) {
    if (i < 0) return Cplx{};
    if (i == 0) return 1.0;
    auto e = elementary_table(x);
    return complete_table(e, i)[static_cast<size_t>(i)];
}

Cplx schur(const std::vector<int>& lam, const PointTuple& x) {
    for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 0) throw std::invalid_argument("schur index must be nonnegative");
        if (i + 1 < lam.size() && lam[i] < lam[i + 1])
            throw std::invalid_argument("schur index must be weakly decreasing");
    }
    int l = static_cast<int>(lam.size());
    while (l > 0 && lam[static_cast<size_t>(l - 1)] == 0) --l;
    if (l == 0) return 1.0;
    auto e = elementary_table(x);
    auto h = complete_table(e, lam[0] + l - 1);
    CMatrix a(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int idx = lam[static_cast<size_t>(i)] + j - i;
            a(i, j) = (idx < 0) ? Cplx{} : h[static_cast<size_t>(idx)];
        }
    return det(std::move(a));
}

namespace {

Cplx pair_from_elem(std::span<const Cplx> elem, int i, int j) {
    const int m = static_cast<int>(elem.size()) - 1;
    auto e = [&](int r) -> Cplx {
        return (r < 0 || r > m) ? Cplx{} : elem[static_cast<size_t>(r)];
    };
    Cplx s = e(i) * e(j);
    for (int k = 1; k <= j; ++k) {
        Cplx term = 2.0 * e(i + k) * e(j - k);
        s += (k % 2) ? -term : term;
    }
    return s;
}

Cplx pfaffian_rec(const CMatrix& a, const std::vector<int>& idx) {
    if (idx.empty()) return 1.0;
    if (idx.size() == 2) return a(idx[0], idx[1]);
    Cplx sum{};
    double sign = 1.0;
    std::vector<int> rest(idx.size() - 2);
    for (size_t p = 1; p < idx.size(); ++p) {
        Cplx head = a(idx[0], idx[p]);
        if (head != Cplx{}) {
            size_t r = 0;
            for (size_t t = 1; t < idx.size(); ++t)
                if (t != p) rest[r++] = idx[t];
            sum += sign * head * pfaffian_rec(a, rest);
        }
        sign = -sign;
    }
    return sum;
}

}  // namespace

Cplx qtilde_pair(int i, int j, const PointTuple& x) {
    if (j < 0 || i < j) throw std::invalid_argument("qtilde_pair needs i >= j >= 0");
    auto e = elementary_table(x);
    return pair_from_elem(e, i, j);
}

Cplx pfaffian(const CMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("pfaffian needs a square matrix");
    if (a.rows() % 2) throw std::invalid_argument("pfaffian needs even order");
    double scale = max_abs(a);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) + a(j, i)) > 1e-12 * scale)
                throw std::invalid_argument("pfaffian needs a skew-symmetric matrix");
    std::vector<int> idx(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) idx[static_cast<size_t>(i)] = i;
    return pfaffian_rec(a, idx);
}

QtildeTable::QtildeTable(const PointTuple& x, int max_part) : max_part_(max_part) {
    if (max_part < 0) throw std::invalid_argument("max_part must be nonnegative");
    elem_ = elementary_table(x);
    pairs_.resize(static_cast<size_t>(max_part + 1) * (max_part + 2) / 2);
    for (int a = 0; a <= max_part; ++a)
        for (int b = 0; b <= a; ++b)
            pairs_[static_cast<size_t>(a) * (a + 1) / 2 + b] = pair_from_elem(elem_, a, b);
}

Cplx QtildeTable::elementary(int i) const {
    if (i < 0 || i >= static_cast<int>(elem_.size())) return Cplx{};
    return elem_[static_cast<size_t>(i)];
}

Cplx QtildeTable::pair(int a, int b) const {
    if (b < 0 || a < b || a > max_part_)
        throw std::invalid_argument("pair index out of range");
    return pairs_[static_cast<size_t>(a) * (a + 1) / 2 + b];
}

Cplx QtildeTable::qtilde(const StrictPartition& lam) const {
    if (lam.empty()) return 1.0;
    if (lam.max_part() > max_part_)
        throw std::invalid_argument("partition exceeds table bound");
    std::vector<int> parts = pad_even(lam);
    const int r = static_cast<int>(parts.size());
    if (r == 2) return pair(parts[0], parts[1]);
    CMatrix b(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            Cplx v = pair(parts[static_cast<size_t>(i)], parts[static_cast<size_t>(j)]);
            b(i, j) = v;
            b(j, i) = -v;
        }
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    return pfaffian_rec(b, idx);
}

Cplx QtildeTable::ptilde(const StrictPartition& lam) const {
    return qtilde(lam) * std::ldexp(1.0, -lam.length());
}

Cplx qtilde(const StrictPartition& lam, const PointTuple& x) {
    return QtildeTable(x, lam.max_part()).qtilde(lam);
}

Cplx ptilde(const StrictPartition& lam, const PointTuple& x) {
    return QtildeTable(x, lam.max_part()).ptilde(lam);
}

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int m = static_cast<int>(entries_.size());
    if (m == 0) throw std::invalid_argument("signed permutation must be nonempty");
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    for (int e : entries_) {
        int v = std::abs(e);
        if (v < 1 || v > m || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("entries must be a signed permutation of 1..m");
        seen[static_cast<size_t>(v)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int m) {
    std::vector<int> e(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) e[static_cast<size_t>(i)] = i + 1;
    return SignedPermutation(std::move(e));
}

bool SignedPermutation::has_bar() const {
    return std::any_of(entries_.begin(), entries_.end(), [](int e) { return e < 0; });
}

PointTuple signed_action(const SignedPermutation& w, const PointTuple& x) {
    if (w.size() != static_cast<int>(x.size()))
        throw std::invalid_argument("signed_action size mismatch");
    PointTuple y(x.size());
    for (int k = 0; k < w.size(); ++k) {
        int e = w.entry(k);
        Cplx v = x[static_cast<size_t>(std::abs(e) - 1)];
        y[static_cast<size_t>(k)] = (e < 0) ? -v : v;
    }
    return y;
}

Cplx key_identity_sum(const SignedPermutation& w, const PointTuple& x) {
    const int m = static_cast<int>(x.size());
    if (w.size() != m) throw std::invalid_argument("signed_action size mismatch");
    PointTuple xw = signed_action(w, x);
    QtildeTable tw(xw, m);
    QtildeTable tx(x, m);
    Cplx s{};
    for (const StrictPartition& lam : enumerate_strict(m))
        s += tw.ptilde(lam) * tx.ptilde(complement(lam, m));
    return s;
}

}  // namespace qgrass
