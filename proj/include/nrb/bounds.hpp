#pragma once

#include <optional>
#include <vector>

#include "nrb/matrix.hpp"

namespace nrb {

/// Upper bounds for |<Ax,y>| + |<By,x>| over unit vectors, for a pair
/// A: H1 -> H2, B: H2 -> H1, plus the earlier bound they are compared with.
struct PairBoundReport {
    double lemma21 = 0.0;    // sqrt(w(|A|+i|B*|) w(|A*|+i|B|) + ||A|| ||B|| + w(BA))
    double lemma22 = 0.0;    // same with ||A|| ||B|| replaced by 0.5 || |A|^2 + |B*|^2 ||
    double reference = 0.0;  // sqrt((||A||+||B||)^2 - (||A|| ||B|| - w(BA)))
};

/// Bound matrices for a partitioned operator: alpha and beta are the upper
/// triangular refinements, abu_omar is the earlier full comparison matrix
/// [t_ij], hou is the entrywise norm matrix [||T_ij||].
struct BlockBoundReport {
    ComplexMatrix alpha;
    ComplexMatrix beta;
    ComplexMatrix abu_omar;
    ComplexMatrix hou;
    double omega_alpha = 0.0;
    double omega_beta = 0.0;
    double omega_abu_omar = 0.0;
    double omega_hou = 0.0;  // operator norm of hou
};

/// Closed-form bounds for a 2x2 operator matrix [[A,B],[C,D]]. The hirzallah
/// comparison needs B + C, so it is only applicable when the two diagonal
/// spaces agree.
struct TwoByTwoBoundReport {
    double cor1 = 0.0;
    double cor2 = 0.0;
    std::optional<double> hirzallah;
    double shebrawi3 = 0.0;
};

struct RowBoundReport {
    double sh1 = 0.0;  // 0.5 (w(A) + sqrt(w(A)^2 + ||B||^2))
    double sh2 = 0.0;  // 0.5 (||A|| + || A A* + B B* ||^{1/2})
};

/// Bounds for a single operator acting on one space.
struct SelfBoundReport {
    double c7 = 0.0;        // 0.5 sqrt(w^2(|T|+i|T*|) + ||T||^2 + w(T^2))
    double c8 = 0.0;        // 0.5 sqrt(w^2(|T|+i|T*|) + 0.5 || |T|^2+|T*|^2 || + w(T^2))
    double kittaneh = 0.0;  // 0.5 || |T| + |T*| ||
    double norm = 0.0;      // ||T||
};

/// Bound matrices for the spectral radius of sum A_i B_i.
struct SpectralSumBoundReport {
    ComplexMatrix gamma;
    ComplexMatrix lambda;
    double omega_gamma = 0.0;
    double omega_lambda = 0.0;
    double r_direct = 0.0;  // spectral radius of sum A_i B_i
};

/// Requires A.rows = B.cols and A.cols = B.rows.
PairBoundReport pair_bounds(const ComplexMatrix& a, const ComplexMatrix& b);

/// |<Ax,y>| + |<By,x>| with x in the domain of A and y in its codomain.
double inner_sum(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& x,
                 const ComplexVector& y);

BlockBoundReport block_bounds(const BlockMatrix& t);

/// A square on H1, D square on H2, B: H2 -> H1, C: H1 -> H2.
TwoByTwoBoundReport two_by_two_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const ComplexMatrix& c, const ComplexMatrix& d);

/// Bounds for [[A, B], [O, O]]; A square, B.rows = A.rows.
RowBoundReport row_bounds(const ComplexMatrix& a, const ComplexMatrix& b);

SelfBoundReport self_bounds(const ComplexMatrix& t);

/// As[i]: H_i -> H1 and Bs[i]: H1 -> H_i, equal-length lists, n >= 1.
SpectralSumBoundReport spectral_sum_bounds(const std::vector<ComplexMatrix>& as,
                                           const std::vector<ComplexMatrix>& bs);

}  // namespace nrb
