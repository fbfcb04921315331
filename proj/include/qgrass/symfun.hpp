#pragma once

#include <span>
#include <vector>

#include "qgrass/linalg.hpp"
#include "qgrass/partition.hpp"

namespace qgrass {

// A point of C^m at which symmetric polynomials are evaluated.
using PointTuple = std::vector<Cplx>;

// Elementary symmetric polynomial e_i; 1 for i = 0, 0 outside 0..m.
Cplx elementary(int i, const PointTuple& x);

// Complete homogeneous symmetric polynomial h_i; 0 for i < 0.
Cplx complete(int i, const PointTuple& x);

// e_0..e_m for the whole tuple in one pass.
std::vector<Cplx> elementary_table(const PointTuple& x);

// h_0..h_upto from an elementary table (elem[0..m]), via the Wronski
// recurrence sum_k (-1)^k e_k h_{i-k} = 0.
std::vector<Cplx> complete_table(std::span<const Cplx> elem, int upto);

// Schur polynomial s_lam as the l x l Jacobi-Trudi determinant
// det[h_{lam_i + j - i}].  lam must be weakly decreasing and nonnegative;
// trailing zeros are fine.
Cplx schur(const std::vector<int>& lam, const PointTuple& x);

// Two-row kernel Qt_{i,j} = e_i e_j + 2 sum_{k=1}^{j} (-1)^k e_{i+k} e_{j-k},
// defined for i >= j >= 0.  Qt_{i,0} = e_i.
Cplx qtilde_pair(int i, int j, const PointTuple& x);

// Pfaffian of an even-order skew-symmetric matrix, normalized so that
// Pf [[0, a], [-a, 0]] = a.  Rejects odd order and matrices whose skewness
// residual exceeds 1e-12 times the largest entry magnitude.
Cplx pfaffian(const CMatrix& a);

// Qt_lam as the Pfaffian of the pair matrix over pad_even(lam), and the
// halved variant Pt_lam = 2^{-l(lam)} Qt_lam.
Cplx qtilde(const StrictPartition& lam, const PointTuple& x);
Cplx ptilde(const StrictPartition& lam, const PointTuple& x);

// Element of the hyperoctahedral group W_m: entry k holds the signed image
// +-w(k) with w(k) in 1..m; a negative entry is a sign flip ("bar").
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> entries);
    static SignedPermutation identity(int m);

    int size() const { return static_cast<int>(entries_.size()); }
    int entry(int k) const { return entries_[static_cast<size_t>(k)]; }
    const std::vector<int>& entries() const { return entries_; }
    bool has_bar() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> entries_;
};

// y_k = +-x_{|w_k|}: coordinates permuted and sign-flipped by w.
PointTuple signed_action(const SignedPermutation& w, const PointTuple& x);

// sum over all strict partitions in {1..m} of Pt_lam(x^w) Pt_{lam^c}(x).
// Equals s_{rho_m}(x) when w has no bar and 0 otherwise.
Cplx key_identity_sum(const SignedPermutation& w, const PointTuple& x);

// Evaluation context for many partitions at one point: the elementary
// table and the full Qt pair triangle are computed once up front.
class QtildeTable {
public:
    QtildeTable(const PointTuple& x, int max_part);

    Cplx elementary(int i) const;
    Cplx pair(int a, int b) const;  // Qt_{a,b}, a >= b >= 0, a <= max_part
    Cplx qtilde(const StrictPartition& lam) const;
    Cplx ptilde(const StrictPartition& lam) const;

private:
    int max_part_;
    std::vector<Cplx> elem_;
    std::vector<Cplx> pairs_;  // packed lower triangle, index a(a+1)/2 + b
};

}  // namespace qgrass
