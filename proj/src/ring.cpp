#include "qgrass/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qgrass/symfun.hpp"

namespace qgrass {

namespace {

int thread_count() {
    if (const char* env = std::getenv("QGRASS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    return 1;
}

// Runs fn(0..count-1), split over QGRASS_THREADS workers when asked for.
void parallel_for(int count, const std::function<void(int)>& fn) {
    int workers = std::min(thread_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

constexpr double kRoundTol = 1e-6;       // structure constant integrality
constexpr double kIdentityTol = 1e-8;    // dual * m residual
constexpr double kSchurFloor = 1e-6;     // normalizer nonvanishing

}  // namespace

int q_degree(Kind kind, int n) {
    return kind == Kind::og ? 2 * n : n + 1;
}

EvaluationTables::EvaluationTables(Kind kind_in, int n_in) : kind(kind_in), n(n_in) {
    basis = enumerate_strict(n);
    const int count = static_cast<int>(basis.size());
    for (int l = 0; l < count; ++l) index_[basis[static_cast<size_t>(l)]] = l;
    complement_index.resize(static_cast<size_t>(count));
    for (int l = 0; l < count; ++l)
        complement_index[static_cast<size_t>(l)] =
            index_.at(complement(basis[static_cast<size_t>(l)], n));

    points = peterson_points(kind, n);
    if (static_cast<int>(points.size()) != count)
        throw std::logic_error("point count does not match basis size");

    const int arity = (kind == Kind::og) ? n : n + 1;
    std::vector<int> rho(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) rho[static_cast<size_t>(i)] = arity - i;

    m = CMatrix(count, count);
    schur_values.resize(static_cast<size_t>(count));
    parallel_for(count, [&](int i) {
        const PointTuple& x = points[static_cast<size_t>(i)].coordinates();
        QtildeTable table(x, n);
        for (int l = 0; l < count; ++l)
            m(i, l) = (kind == Kind::og) ? table.ptilde(basis[static_cast<size_t>(l)])
                                         : table.qtilde(basis[static_cast<size_t>(l)]);
        schur_values[static_cast<size_t>(i)] = schur(rho, x);
    });

    for (int i = 0; i < count; ++i)
        if (std::abs(schur_values[static_cast<size_t>(i)]) <= kSchurFloor)
            throw std::runtime_error("vanishing normalizer at a Peterson point");

    dual = CMatrix(count, count);
    const double t = points.front().scale();
    const Cplx lg_factor = std::pow(t, n + 1.0) / std::ldexp(1.0, n);
    for (int l = 0; l < count; ++l)
        for (int i = 0; i < count; ++i) {
            Cplx v = m(i, complement_index[static_cast<size_t>(l)]) /
                     schur_values[static_cast<size_t>(i)];
            dual(l, i) = (kind == Kind::og) ? v : lg_factor * v;
        }

    CMatrix check = matmul(dual, m);
    for (int i = 0; i < count; ++i) check(i, i) -= 1.0;
    identity_residual = inf_norm(check);
    if (identity_residual > kIdentityTol)
        throw std::runtime_error("evaluation tables fail the inversion check");
}

int EvaluationTables::basis_index(const StrictPartition& lam) const {
    auto it = index_.find(lam);
    if (it == index_.end())
        throw std::invalid_argument("partition is not a basis class of this rank");
    return it->second;
}

const std::vector<StructureTerm>& EvaluationTables::pair_product(int a, int b) const {
    const int count = static_cast<int>(basis.size());
    if (a < 0 || a >= count || b < 0 || b >= count)
        throw std::invalid_argument("basis index out of range");
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto& slot = cache_[{a, b}];
    if (slot) return *slot;

    std::vector<Cplx> pointwise(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        pointwise[static_cast<size_t>(i)] = m(i, a) * m(i, b);

    const int degq = q_degree(kind, n);
    const int wa = basis[static_cast<size_t>(a)].weight();
    const int wb = basis[static_cast<size_t>(b)].weight();
    auto out = std::make_unique<std::vector<StructureTerm>>();
    for (int l = 0; l < count; ++l) {
        Cplx raw{};
        for (int i = 0; i < count; ++i) raw += dual(l, i) * pointwise[static_cast<size_t>(i)];
        const int shift = wa + wb - basis[static_cast<size_t>(l)].weight();
        if (shift < 0 || shift % degq) {
            if (std::abs(raw.real()) > kRoundTol || std::abs(raw.imag()) > kRoundTol)
                throw std::runtime_error("structure constant at a forbidden degree: " +
                                         basis[static_cast<size_t>(a)].to_string() + " * " +
                                         basis[static_cast<size_t>(b)].to_string());
            continue;
        }
        long long c = std::llround(raw.real());
        if (std::abs(raw.real() - static_cast<double>(c)) > kRoundTol ||
            std::abs(raw.imag()) > kRoundTol)
            throw std::runtime_error("structure constant failed to round to an integer: " +
                                     basis[static_cast<size_t>(a)].to_string() + " * " +
                                     basis[static_cast<size_t>(b)].to_string());
        if (c < 0)
            throw std::runtime_error("negative structure constant: " +
                                     basis[static_cast<size_t>(a)].to_string() + " * " +
                                     basis[static_cast<size_t>(b)].to_string());
        if (c) out->push_back(StructureTerm{basis[static_cast<size_t>(l)], shift / degq, c});
    }
    slot = std::move(out);
    return *slot;
}

const EvaluationTables& evaluation_tables(Kind kind, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<EvaluationTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(kind), n}];
    if (!slot) slot = std::make_unique<EvaluationTables>(kind, n);
    return *slot;
}

std::vector<StructureTerm> structure_constants(Kind kind, int n, const StrictPartition& a,
                                               const StrictPartition& b) {
    const EvaluationTables& tables = evaluation_tables(kind, n);
    return tables.pair_product(tables.basis_index(a), tables.basis_index(b));
}

RingElement::RingElement(Kind kind, int n) : kind_(kind), n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
}

RingElement RingElement::unit(Kind kind, int n) {
    RingElement e(kind, n);
    e.add_term(StrictPartition{}, 0, 1);
    return e;
}

RingElement RingElement::basis(Kind kind, int n, const StrictPartition& lam) {
    if (!lam.fits(n))
        throw std::invalid_argument("partition is not a basis class of this rank");
    RingElement e(kind, n);
    e.add_term(lam, 0, 1);
    return e;
}

RingElement RingElement::q_power(Kind kind, int n, int d) {
    if (d < 0) throw std::invalid_argument("negative q power");
    RingElement e(kind, n);
    e.add_term(StrictPartition{}, d, 1);
    return e;
}

void RingElement::add_term(const StrictPartition& lam, int q, long long coeff) {
    if (!coeff) return;
    auto [it, inserted] = terms_.try_emplace({lam, q}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (!it->second) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    if (kind_ != other.kind_ || n_ != other.n_)
        throw std::invalid_argument("mixed-ring arithmetic");
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    if (kind_ != other.kind_ || n_ != other.n_)
        throw std::invalid_argument("mixed-ring arithmetic");
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
}

RingElement& RingElement::operator*=(long long scalar) {
    if (!scalar) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

bool RingElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int degq = q_degree(kind_, n_);
    const auto& first = terms_.begin()->first;
    const int total = first.first.weight() + first.second * degq;
    for (const auto& [key, c] : terms_)
        if (key.first.weight() + key.second * degq != total) return false;
    return true;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    const char* symbol = (kind_ == Kind::og) ? "\xcf\x84" : "\xcf\x83";  // τ / σ
    std::vector<std::pair<Key, long long>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return basis_less(a.first.first, b.first.first);
    });
    std::string out;
    for (const auto& [key, c] : order) {
        long long mag = c < 0 ? -c : c;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        std::string body;
        if (!key.first.empty()) body = std::string(symbol) + "(" + key.first.to_string() + ")";
        if (key.second >= 1) {
            if (!body.empty()) body += "\xc2\xb7";  // ·
            body += (key.second == 1) ? "q" : "q^" + std::to_string(key.second);
        }
        if (body.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += body;
        else
            out += std::to_string(mag) + "\xc2\xb7" + body;
    }
    return out;
}

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator*(RingElement a, long long scalar) { return a *= scalar; }

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.kind() != b.kind() || a.rank() != b.rank())
        throw std::invalid_argument("mixed-ring multiplication");
    const EvaluationTables& tables = evaluation_tables(a.kind(), a.rank());
    RingElement out(a.kind(), a.rank());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const auto& terms =
                tables.pair_product(tables.basis_index(ka.first), tables.basis_index(kb.first));
            for (const StructureTerm& t : terms)
                out.add_term(t.nu, t.q + ka.second + kb.second, t.coeff * ca * cb);
        }
    return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }

Cplx evaluate_at_point(const RingElement& x, int point_index) {
    const EvaluationTables& tables = evaluation_tables(x.kind(), x.rank());
    if (point_index < 0 || point_index >= static_cast<int>(tables.points.size()))
        throw std::invalid_argument("point index out of range");
    Cplx v{};
    for (const auto& [key, c] : x.terms())
        v += static_cast<double>(c) * tables.m(point_index, tables.basis_index(key.first));
    return v;
}

RingElement quantum_euler(Kind kind, int n) {
    RingElement out(kind, n);
    for (const StrictPartition& lam : enumerate_strict(n))
        out += multiply(RingElement::basis(kind, n, lam),
                        RingElement::basis(kind, n, complement(lam, n)));
    return out;
}

RingElement one_row_class(Kind kind, int n, int r) {
    if (r < 0 || r > n) return RingElement::zero(kind, n);
    if (r == 0) return RingElement::unit(kind, n);
    return RingElement::basis(kind, n, StrictPartition{{r}});
}

namespace {

// Entry of the Pfaffian expansion: the class of the (a, b) pair, with
// b = 0 meaning the one-row class.
RingElement pair_class(Kind kind, int n, int a, int b) {
    if (b == 0) return one_row_class(kind, n, a);
    return RingElement::basis(kind, n, StrictPartition{{a, b}});
}

RingElement pfaffian_expand(Kind kind, int n, const std::vector<int>& parts,
                            const std::vector<int>& idx) {
    if (idx.empty()) return RingElement::unit(kind, n);
    if (idx.size() == 2)
        return pair_class(kind, n, parts[static_cast<size_t>(idx[0])],
                          parts[static_cast<size_t>(idx[1])]);
    RingElement sum = RingElement::zero(kind, n);
    long long sign = 1;
    std::vector<int> rest(idx.size() - 2);
    for (size_t p = 1; p < idx.size(); ++p) {
        size_t r = 0;
        for (size_t t = 1; t < idx.size(); ++t)
            if (t != p) rest[r++] = idx[t];
        RingElement head = pair_class(kind, n, parts[static_cast<size_t>(idx[0])],
                                      parts[static_cast<size_t>(idx[p])]);
        sum += multiply(head, pfaffian_expand(kind, n, parts, rest)) * sign;
        sign = -sign;
    }
    return sum;
}

}  // namespace

RingElement pfaffian_giambelli(Kind kind, int n, const StrictPartition& lam) {
    if (lam.empty()) return RingElement::unit(kind, n);
    if (!lam.fits(n))
        throw std::invalid_argument("partition is not a basis class of this rank");
    std::vector<int> parts = pad_even(lam);
    std::vector<int> idx(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) idx[i] = static_cast<int>(i);
    return pfaffian_expand(kind, n, parts, idx);
}

namespace {

void expect_equal(PresentationReport& report, const std::string& name, const RingElement& got,
                  const RingElement& want) {
    ++report.checked;
    if (!(got == want))
        report.violations.push_back(name + ": got " + got.to_string() + ", want " +
                                    want.to_string());
}

}  // namespace

PresentationReport verify_presentation(Kind kind, int n) {
    PresentationReport report{kind, n, 0, {}};
    const RingElement q = RingElement::q_power(kind, n, 1);
    auto row = [&](int r) { return one_row_class(kind, n, r); };

    if (kind == Kind::lg) {
        for (int i = 1; i <= n; ++i) {
            RingElement lhs = multiply(row(i), row(i));
            for (int k = 1; k <= n - i; ++k)
                lhs += multiply(row(i + k), row(i - k)) * (k % 2 ? -2 : 2);
            RingElement rhs = multiply(row(2 * i - n - 1), q);
            if ((n - i) % 2) rhs *= -1;
            expect_equal(report, "lg relation i=" + std::to_string(i), lhs, rhs);
        }
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) {
                RingElement rhs = multiply(row(i), row(j));
                for (int k = 1; k <= n - i; ++k)
                    rhs += multiply(row(i + k), row(j - k)) * (k % 2 ? -2 : 2);
                RingElement corr = multiply(row(i + j - n - 1), q);
                if ((n + 1 - i) % 2) corr *= -1;
                rhs += corr;
                expect_equal(report,
                             "lg giambelli (" + std::to_string(i) + "," + std::to_string(j) + ")",
                             RingElement::basis(kind, n, StrictPartition{{i, j}}), rhs);
            }
    } else {
        for (int i = 1; i < n; ++i) {
            RingElement lhs = multiply(row(i), row(i));
            for (int k = 1; k < i; ++k)
                lhs += multiply(row(i + k), row(i - k)) * (k % 2 ? -2 : 2);
            lhs += row(2 * i) * (i % 2 ? -1 : 1);
            expect_equal(report, "og relation i=" + std::to_string(i), lhs,
                         RingElement::zero(kind, n));
        }
        expect_equal(report, "og relation i=" + std::to_string(n), multiply(row(n), row(n)), q);
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) {
                RingElement rhs = multiply(row(i), row(j));
                for (int k = 1; k < j; ++k)
                    rhs += multiply(row(i + k), row(j - k)) * (k % 2 ? -2 : 2);
                rhs += row(i + j) * (j % 2 ? -1 : 1);
                expect_equal(report,
                             "og giambelli (" + std::to_string(i) + "," + std::to_string(j) + ")",
                             RingElement::basis(kind, n, StrictPartition{{i, j}}), rhs);
            }
    }

    // Longer classes: Pfaffian expansion into two-row classes.  Checked for
    // every class up to rank 6; beyond that one representative per length
    // keeps the runtime flat.
    if (n <= 6) {
        for (const StrictPartition& lam : enumerate_strict(n))
            if (lam.length() >= 3)
                expect_equal(report, "pfaffian giambelli " + lam.to_string(),
                             pfaffian_giambelli(kind, n, lam),
                             RingElement::basis(kind, n, lam));
    } else {
        for (int len = 3; len <= 4; ++len) {
            std::vector<int> parts(static_cast<size_t>(len));
            for (int i = 0; i < len; ++i) parts[static_cast<size_t>(i)] = len - i;
            StrictPartition lam{parts};
            expect_equal(report, "pfaffian giambelli " + lam.to_string(),
                         pfaffian_giambelli(kind, n, lam), RingElement::basis(kind, n, lam));
        }
    }
    return report;
}

}  // namespace qgrass
