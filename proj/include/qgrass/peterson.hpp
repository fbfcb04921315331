#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qgrass/linalg.hpp"
#include "qgrass/symfun.hpp"

namespace qgrass {

// Which maximal isotropic Grassmannian a computation refers to:
// og = orthogonal OG(n), lg = Lagrangian LG(n).
enum class Kind { og, lg };

std::string_view kind_name(Kind k);
Kind parse_kind(std::string_view text);  // "og" / "lg"

enum class Parity { even, odd };

// An N-subset of the roots of z^{2N} = (-1)^{N+1} containing no antipodal
// pair.  Entries are stored as "doubled indices" m with root exp(i*pi*m/(2N)),
// canonicalized into the window [-(N-1), 3N-1]; all m share the parity of
// N+1, and antipodal roots sit at m and m+2N.
class ExclusiveTuple {
public:
    ExclusiveTuple(int order, std::vector<int> doubled);

    int order() const { return order_; }
    const std::vector<int>& doubled_indices() const { return doubled_; }

    // Sign of e_N on the roots: even means +1.
    Parity parity() const { return parity_; }
    // True when the roots fill an arc of N consecutive slots on the circle
    // of all 2N candidate roots (rotation-invariant, so wrap-around arcs
    // count too).
    bool is_closed() const { return closed_; }

    PointTuple roots() const;          // the N roots
    PointTuple squared_roots() const;  // their squares

    friend bool operator==(const ExclusiveTuple&, const ExclusiveTuple&) = default;

private:
    int order_ = 0;
    std::vector<int> doubled_;
    Parity parity_ = Parity::even;
    bool closed_ = false;
};

// All 2^N exclusive tuples of the given order, sorted lexicographically by
// doubled indices.  The first entry is the base tuple (-(N-1), -(N-3), ...,
// N-1), which is closed and even.
std::vector<ExclusiveTuple> enumerate_exclusive(int order);

// Numerical witnesses for the defining power sums: e_i of the squared roots
// for 0 < i < N (all should vanish) and |e_N(roots)^2 - 1|.
struct PowerCheck {
    double max_elementary;
    double top_square;
};
PowerCheck exclusive_power_check(const ExclusiveTuple& t);

// A point of the rank-n Peterson torus fixed-locus: scaled roots t * zeta^I
// together with the cached generator values e_1..e_N at those coordinates.
// OG(n) points have N = n, LG(n) points have N = n+1 and even parity.
class PetersonPoint {
public:
    static PetersonPoint at_scale(Kind kind, int n, ExclusiveTuple tuple, double t);

    Kind kind() const { return kind_; }
    int rank() const { return n_; }
    const ExclusiveTuple& tuple() const { return tuple_; }
    double scale() const { return t_; }
    const PointTuple& coordinates() const { return coords_; }
    // generators()[i-1] = e_i(coordinates), 1 <= i <= tuple order.
    std::span<const Cplx> generators() const { return generators_; }

    friend bool operator==(const PetersonPoint&, const PetersonPoint&) = default;

private:
    PetersonPoint() = default;
    Kind kind_ = Kind::og;
    int n_ = 0;
    ExclusiveTuple tuple_{1, {0}};
    double t_ = 1.0;
    PointTuple coords_;
    std::vector<Cplx> generators_;
};

// Canonical scales: 4^{1/(2n)} for og, (1/2)^{1/(n+1)} for lg.  With these
// the quantum parameter evaluates to exactly 1.
double og_scale(int n);
double lg_scale(int n);

// The 2^n canonical points of the given kind and rank (n >= 2), in the
// enumeration order of their tuples.
std::vector<PetersonPoint> peterson_points(Kind kind, int n);

// Normalized quantum parameter at a point: e_n(x)^2 / 4 for og,
// 2 e_{n+1}(x) for lg.  Equals 1 at canonical scale.
Cplx evaluate_q(const PetersonPoint& p);

// Largest residual of the diagonal band relations
// g_i^2 + 2 sum_k (-1)^k g_{i+k} g_{i-k}, i = 1..N-1, where g_0 = 1,
// g_1..g_N are the supplied generator values and g_r = 0 beyond N.
// Vanishes on Peterson points; order 1 on generic tuples.
double band_relation_residual(Kind kind, int n, std::span<const Cplx> generators);
double band_relation_residual(const PetersonPoint& p);

// Unit upper-triangular banded Toeplitz matrix of the generator sequence,
// order 2n for og and 2n+1 for lg.
CMatrix toeplitz_matrix(const PetersonPoint& p);

// A signed permutation w with signed_action(w, from.roots()) == to.roots(),
// found by matching each root of `to` to a root of `from` up to sign.
// Has a bar exactly when the tuples differ.
SignedPermutation matching_action(const ExclusiveTuple& from, const ExclusiveTuple& to);

}  // namespace qgrass
