#include "qgrass/peterson.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qgrass {

std::string_view kind_name(Kind k) {
    return k == Kind::og ? "og" : "lg";
}

Kind parse_kind(std::string_view text) {
    if (text == "og") return Kind::og;
    if (text == "lg") return Kind::lg;
    throw std::invalid_argument("kind must be 'og' or 'lg'");
}

ExclusiveTuple::ExclusiveTuple(int order, std::vector<int> doubled)
    : order_(order), doubled_(std::move(doubled)) {
    const int n4 = 4 * order_;
    if (order_ < 1 || order_ > 24)
        throw std::invalid_argument("tuple order out of supported range");
    if (static_cast<int>(doubled_.size()) != order_)
        throw std::invalid_argument("tuple needs exactly one index per antipodal pair");
    for (size_t i = 0; i < doubled_.size(); ++i) {
        int m = doubled_[i];
        if (m < -(order_ - 1) || m > 3 * order_ - 1)
            throw std::invalid_argument("doubled index outside canonical window");
        if (((m - (order_ + 1)) % 2 + 2) % 2 != 0)
            throw std::invalid_argument("doubled index has wrong parity");
        if (i && doubled_[i - 1] >= m)
            throw std::invalid_argument("doubled indices must strictly increase");
    }
    // No antipodal pair: within the window the partner of m is exactly m+2N.
    for (size_t i = 0; i < doubled_.size(); ++i)
        for (size_t j = i + 1; j < doubled_.size(); ++j)
            if (doubled_[j] - doubled_[i] == 2 * order_)
                throw std::invalid_argument("tuple contains an antipodal pair");

    int sum = 0;
    for (int m : doubled_) sum += m;
    int r = ((sum % n4) + n4) % n4;
    if (r == 0)
        parity_ = Parity::even;
    else if (r == 2 * order_)
        parity_ = Parity::odd;
    else
        throw std::logic_error("exclusive tuple with unexpected index sum");

    // Closed = the chosen slots form one arc: all circular gaps equal 2
    // except a single gap of 2N+2.
    std::vector<int> res(doubled_.size());
    for (size_t i = 0; i < doubled_.size(); ++i)
        res[i] = ((doubled_[i] % n4) + n4) % n4;
    std::sort(res.begin(), res.end());
    int big = 0, small = 0;
    for (size_t i = 0; i < res.size(); ++i) {
        int gap = (i + 1 < res.size()) ? res[i + 1] - res[i] : res[0] + n4 - res.back();
        if (gap == 2)
            ++small;
        else if (gap == 2 * order_ + 2)
            ++big;
    }
    closed_ = (big == 1 && small == order_ - 1);
}

PointTuple ExclusiveTuple::roots() const {
    PointTuple out(doubled_.size());
    for (size_t i = 0; i < doubled_.size(); ++i)
        out[i] = std::polar(1.0, std::numbers::pi * doubled_[i] / (2.0 * order_));
    return out;
}

PointTuple ExclusiveTuple::squared_roots() const {
    PointTuple out(doubled_.size());
    for (size_t i = 0; i < doubled_.size(); ++i)
        out[i] = std::polar(1.0, std::numbers::pi * doubled_[i] / order_);
    return out;
}

std::vector<ExclusiveTuple> enumerate_exclusive(int order) {
    if (order < 1 || order > 24)
        throw std::invalid_argument("tuple order out of supported range");
    std::vector<ExclusiveTuple> out;
    out.reserve(size_t(1) << order);
    for (unsigned mask = 0; mask < (1u << order); ++mask) {
        std::vector<int> doubled(static_cast<size_t>(order));
        for (int s = 0; s < order; ++s)
            doubled[static_cast<size_t>(s)] =
                -(order - 1) + 2 * s + ((mask >> s) & 1u ? 2 * order : 0);
        std::sort(doubled.begin(), doubled.end());
        out.emplace_back(order, std::move(doubled));
    }
    std::sort(out.begin(), out.end(), [](const ExclusiveTuple& a, const ExclusiveTuple& b) {
        return a.doubled_indices() < b.doubled_indices();
    });
    return out;
}

PowerCheck exclusive_power_check(const ExclusiveTuple& t) {
    auto e2 = elementary_table(t.squared_roots());
    double worst = 0.0;
    for (int i = 1; i < t.order(); ++i)
        worst = std::max(worst, std::abs(e2[static_cast<size_t>(i)]));
    Cplx top = elementary_table(t.roots())[static_cast<size_t>(t.order())];
    return PowerCheck{worst, std::abs(top * top - 1.0)};
}

double og_scale(int n) {
    return std::pow(4.0, 1.0 / (2.0 * n));
}

double lg_scale(int n) {
    return std::pow(0.5, 1.0 / (n + 1.0));
}

PetersonPoint PetersonPoint::at_scale(Kind kind, int n, ExclusiveTuple tuple, double t) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    const int want = (kind == Kind::og) ? n : n + 1;
    if (tuple.order() != want)
        throw std::invalid_argument("tuple order does not match rank");
    if (kind == Kind::lg && tuple.parity() != Parity::even)
        throw std::invalid_argument("lg points need even tuples");
    if (!(t > 0.0)) throw std::invalid_argument("scale must be positive");

    PetersonPoint p;
    p.kind_ = kind;
    p.n_ = n;
    p.tuple_ = std::move(tuple);
    p.t_ = t;
    p.coords_ = p.tuple_.roots();
    for (Cplx& c : p.coords_) c *= t;
    auto e = elementary_table(p.coords_);
    p.generators_.assign(e.begin() + 1, e.end());
    return p;
}

std::vector<PetersonPoint> peterson_points(Kind kind, int n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    std::vector<PetersonPoint> out;
    out.reserve(size_t(1) << n);
    if (kind == Kind::og) {
        double t = og_scale(n);
        for (ExclusiveTuple& tup : enumerate_exclusive(n))
            out.push_back(PetersonPoint::at_scale(kind, n, std::move(tup), t));
    } else {
        double t = lg_scale(n);
        for (ExclusiveTuple& tup : enumerate_exclusive(n + 1))
            if (tup.parity() == Parity::even)
                out.push_back(PetersonPoint::at_scale(kind, n, std::move(tup), t));
    }
    return out;
}

Cplx evaluate_q(const PetersonPoint& p) {
    auto g = p.generators();
    if (p.kind() == Kind::og) {
        Cplx en = g[static_cast<size_t>(p.rank() - 1)];
        return 0.25 * en * en;
    }
    return 2.0 * g[static_cast<size_t>(p.rank())];
}

double band_relation_residual(Kind kind, int n, std::span<const Cplx> generators) {
    const int order = (kind == Kind::og) ? n : n + 1;
    if (static_cast<int>(generators.size()) != order)
        throw std::invalid_argument("generator count does not match rank");
    auto g = [&](int r) -> Cplx {
        if (r == 0) return 1.0;
        if (r < 0 || r > order) return Cplx{};
        return generators[static_cast<size_t>(r - 1)];
    };
    double worst = 0.0;
    for (int i = 1; i < order; ++i) {
        Cplx rel = g(i) * g(i);
        for (int k = 1; k <= i; ++k) {
            Cplx term = 2.0 * g(i + k) * g(i - k);
            rel += (k % 2) ? -term : term;
        }
        worst = std::max(worst, std::abs(rel));
    }
    return worst;
}

double band_relation_residual(const PetersonPoint& p) {
    return band_relation_residual(p.kind(), p.rank(), p.generators());
}

CMatrix toeplitz_matrix(const PetersonPoint& p) {
    const int order = (p.kind() == Kind::og) ? p.rank() : p.rank() + 1;
    const int size = (p.kind() == Kind::og) ? 2 * p.rank() : 2 * p.rank() + 1;
    CMatrix out(size, size);
    auto g = p.generators();
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) {
            int band = j - i;
            if (band == 0)
                out(i, j) = 1.0;
            else if (band <= order)
                out(i, j) = g[static_cast<size_t>(band - 1)];
        }
    return out;
}

SignedPermutation matching_action(const ExclusiveTuple& from, const ExclusiveTuple& to) {
    if (from.order() != to.order())
        throw std::invalid_argument("tuples must have the same order");
    const int n4 = 4 * from.order();
    std::map<int, int> where;  // residue mod 4N -> 1-based position in `from`
    for (int i = 0; i < from.order(); ++i) {
        int r = ((from.doubled_indices()[static_cast<size_t>(i)] % n4) + n4) % n4;
        where[r] = i + 1;
    }
    std::vector<int> entries(static_cast<size_t>(to.order()));
    for (int k = 0; k < to.order(); ++k) {
        int r = ((to.doubled_indices()[static_cast<size_t>(k)] % n4) + n4) % n4;
        if (auto it = where.find(r); it != where.end())
            entries[static_cast<size_t>(k)] = it->second;
        else if (auto anti = where.find((r + 2 * from.order()) % n4); anti != where.end())
            entries[static_cast<size_t>(k)] = -anti->second;
        else
            throw std::logic_error("exclusive tuples failed to match up to sign");
    }
    return SignedPermutation(std::move(entries));
}

}  // namespace qgrass
