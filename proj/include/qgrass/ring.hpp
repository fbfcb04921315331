#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/linalg.hpp"
#include "qgrass/partition.hpp"
#include "qgrass/peterson.hpp"

namespace qgrass {

// Degree of the quantum parameter: 2n for og, n+1 for lg.
int q_degree(Kind kind, int n);

// An integer combination of q^d * (Schubert basis class).  Coefficients of
// honest basis products are nonnegative, but general elements (differences
// built while checking presentations) may carry any sign.
class RingElement {
public:
    using Key = std::pair<StrictPartition, int>;  // (class, power of q)

    RingElement(Kind kind, int n);

    static RingElement zero(Kind kind, int n) { return RingElement(kind, n); }
    static RingElement unit(Kind kind, int n);
    static RingElement basis(Kind kind, int n, const StrictPartition& lam);
    static RingElement q_power(Kind kind, int n, int d);

    Kind kind() const { return kind_; }
    int rank() const { return n_; }
    const std::map<Key, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const StrictPartition& lam, int q, long long coeff);
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(long long scalar);

    // Classes with the degree shift |nu| + d * q_degree; true for any
    // product of basis elements.
    bool is_homogeneous() const;

    std::string to_string() const;  // e.g. "σ(2,1) + q" / "τ(2)"

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    Kind kind_;
    int n_;
    std::map<Key, long long> terms_;
};

RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement operator*(RingElement a, long long scalar);

// One product term: coeff * q^q * class(nu).
struct StructureTerm {
    StrictPartition nu;
    int q;
    long long coeff;

    friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

// Shared evaluation data for a (kind, rank): basis classes evaluated at all
// Peterson points, the dual (interpolation) transform, and the Schur-type
// normalizers.  Construction checks that dual * m is the identity to 1e-8
// in the infinity norm; failure means an evaluation kernel bug.
class EvaluationTables {
public:
    EvaluationTables(Kind kind, int n);

    Kind kind;
    int n;
    std::vector<StrictPartition> basis;  // 2^n classes in basis order
    std::vector<int> complement_index;   // position of the complementary class
    std::vector<PetersonPoint> points;   // 2^n points in enumeration order
    CMatrix m;                           // m(point, class) = class value at point
    CMatrix dual;                        // dual(class, point); dual * m = id
    std::vector<Cplx> schur_values;      // normalizer per point, never zero
    double identity_residual = 0.0;

    int basis_index(const StrictPartition& lam) const;

    // Structure constants of basis[a] * basis[b], cached on first use.
    // Safe for concurrent readers.
    const std::vector<StructureTerm>& pair_product(int a, int b) const;

private:
    std::map<StrictPartition, int> index_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<std::vector<StructureTerm>>> cache_;
};

// Cached per (kind, n); built on first request.
const EvaluationTables& evaluation_tables(Kind kind, int n);

// Quantum product of two basis classes as a finite list of terms in basis
// order of nu.  Coefficients are exact nonnegative integers; a value that
// fails to round cleanly (or a nonintegral q-degree with nonvanishing
// coefficient) throws std::runtime_error.
std::vector<StructureTerm> structure_constants(Kind kind, int n,
                                               const StrictPartition& a,
                                               const StrictPartition& b);

// Bilinear extension of the structure constants.
RingElement multiply(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);

// Value of the element at Peterson point #i, with q set to 1.
Cplx evaluate_at_point(const RingElement& x, int point_index);

// sum over the basis of class * complementary class.
RingElement quantum_euler(Kind kind, int n);

// One-row class: zero outside 0..n, unit for r = 0, basis (r) otherwise.
RingElement one_row_class(Kind kind, int n, int r);

// The Pfaffian-style expansion of a class of length >= 1 into two-row
// classes under the quantum product.
RingElement pfaffian_giambelli(Kind kind, int n, const StrictPartition& lam);

struct PresentationReport {
    Kind kind;
    int n;
    int checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Recomputes the defining relations and the (two-row and Pfaffian)
// Giambelli identities from structure constants; exact integer comparison.
PresentationReport verify_presentation(Kind kind, int n);

}  // namespace qgrass
