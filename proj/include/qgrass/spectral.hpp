#pragma once

#include <string>
#include <vector>

#include "qgrass/linalg.hpp"
#include "qgrass/partition.hpp"
#include "qgrass/peterson.hpp"

namespace qgrass {

// Matrix of quantum multiplication by the given basis class on the Schubert
// basis at q = 1; entry (nu, mu) is the structure constant of nu in
// class * mu summed over q powers.
CMatrix operator_matrix(Kind kind, int n, const StrictPartition& lam);

// Closed-form eigenpair attached to a Peterson point: the eigenvalue is the
// class value at the point, the eigenvector coefficient on basis class mu is
// the value of the complementary class there.  The same vectors diagonalize
// every operator_matrix of the ring simultaneously.
struct EigenPair {
    int point_index;
    Cplx value;
    std::vector<Cplx> vec;  // coefficients in basis order
};
std::vector<EigenPair> eigenpairs(Kind kind, int n, const StrictPartition& lam);

// Index of the anticanonical class: 2n for og, n+1 for lg.
int fano_index(Kind kind, int n);

// Spectrum of quantum multiplication by c_1, one value per Peterson point:
// n * e_1(coordinates) for og and (n+1) * e_1(coordinates) for lg.
std::vector<Cplx> c1_spectrum(Kind kind, int n);

struct SpectralCluster {
    Cplx value;
    int multiplicity;

    friend bool operator==(const SpectralCluster&, const SpectralCluster&) = default;
};

struct ConjectureOReport {
    Kind kind;
    int n;
    int fano;
    double t0;                             // largest eigenvalue modulus
    std::vector<SpectralCluster> spectrum; // clustered, by decreasing modulus
    bool cond1;                            // T0 itself is an eigenvalue
    bool cond2;                            // max-modulus values are T0 * r-th roots of 1
    bool cond3;                            // T0 has multiplicity one
    int max_modulus_count;
    bool indeterminate;                    // clustering too close to the tolerance
    std::string note;

    bool pass() const { return cond1 && cond2 && cond3 && !indeterminate; }

    friend bool operator==(const ConjectureOReport&, const ConjectureOReport&) = default;
};

// Clusters the c_1 spectrum at tol * max(1, T0) and evaluates the three
// properties above.  Cluster separations between the threshold and ten
// times the threshold mark the report indeterminate instead of guessing.
ConjectureOReport conjecture_o(Kind kind, int n, double tol = 1e-8);

}  // namespace qgrass
