#pragma once

#include <vector>

#include "nrb/matrix.hpp"

namespace nrb {

/// Hermitian eigensolver controls: cyclic Jacobi sweeps run until the
/// off-diagonal Frobenius mass falls below kJacobiOffTol times the Frobenius
/// norm of the input; exhausting the sweep budget is a hard error.
inline constexpr double kJacobiOffTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// A matrix handed to the Hermitian eigensolver may deviate from exact
/// Hermitian symmetry by at most this factor times its largest entry
/// magnitude; it is symmetrized before the solve.
inline constexpr double kHermitianTol = 1e-12;

/// Eigenvalues of a nominally PSD matrix down to -kPsdClamp * lambda_max are
/// treated as rounding noise and clamped to zero; anything lower is an error.
inline constexpr double kPsdClamp = 1e-10;

/// Numerical-radius sweep: uniform angle samples on [0, 2pi), the strongest
/// local maxima kept for refinement, and the golden-section window width at
/// which refinement stops.
inline constexpr int kSweepSamples = 720;
inline constexpr int kSweepRefineCount = 3;
inline constexpr double kSweepRefineWidth = 1e-12;

/// Spectral radius via normalized repeated squaring: stop once the k-th
/// log-norm increment 2^-k |log n_k| drops below the increment tolerance
/// (tested from k = 1 on), the running norm underflows (the limit is then 0),
/// or the iteration budget runs out.
inline constexpr double kRadiusIncrementTol = 1e-10;
inline constexpr int kRadiusMaxIter = 60;
inline constexpr double kRadiusUnderflow = 1e-300;

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix vectors;            // column k pairs with eigenvalues[k]
};

/// Full eigendecomposition of a Hermitian matrix (validated against
/// kHermitianTol, then symmetrized). Throws std::invalid_argument for
/// non-Hermitian input and std::runtime_error if the sweep budget runs out.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Eigenvalues only, ascending; same contract as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Largest singular value, sqrt(lambda_max(A* A)).
double operator_norm(const ComplexMatrix& a);

/// P^s for Hermitian PSD P (within kPsdClamp) and finite s >= 0, with the
/// convention 0^0 = 1 so that P^0 = I.
ComplexMatrix psd_power(const ComplexMatrix& p, double s);

/// Operator absolute value |A| = (A* A)^{1/2}; rectangular input is fine and
/// the result is square with side A.cols().
ComplexMatrix abs_value(const ComplexMatrix& a);

/// Numerical radius through the rotated-real-part sweep:
/// max over theta of lambda_max(cos(theta) P + sin(theta) Q) where P, Q are
/// the Hermitian real and imaginary parts of the matrix.
double numerical_radius(const ComplexMatrix& a);

/// Spectral radius via the Gelfand limit with normalized repeated squaring.
double spectral_radius(const ComplexMatrix& a);

struct SpectralSummary {
    double numerical_radius = 0.0;
    double operator_norm = 0.0;
    double spectral_radius = 0.0;
};

/// All three radii of one square matrix.
SpectralSummary spectral_summary(const ComplexMatrix& a);

namespace detail {

/// In-place cyclic complex Jacobi. h is a row-major n x n Hermitian buffer and
/// is destroyed; eigenvalues land in w unsorted. If v is non-null it must hold
/// the identity on entry and accumulates eigenvectors as columns.
void jacobi_hermitian(Complex* h, std::size_t n, double* w, Complex* v);

struct EigEdges {
    double min = 0.0;
    double max = 0.0;
};

/// Both spectrum edges of a Hermitian scratch buffer (destroyed). Closed form
/// for n <= 2, Jacobi otherwise.
EigEdges hermitian_edges(Complex* h, std::size_t n);

/// Numerical radius of P + iQ given its Hermitian parts directly.
double numerical_radius_pq(const ComplexMatrix& p, const ComplexMatrix& q);

}  // namespace detail

}  // namespace nrb
