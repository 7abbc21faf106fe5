#include "nrb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace nrb {

namespace {

void require_square_nonempty(const ComplexMatrix& a, const char* what) {
    if (a.empty()) throw std::invalid_argument(std::string(what) + ": matrix must be nonempty");
    if (!a.is_square()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

/// Validates Hermitian symmetry within kHermitianTol * max|entry| and returns
/// the exactly symmetrized copy (H + H*)/2.
ComplexMatrix checked_symmetrize(const ComplexMatrix& h, const char* what) {
    require_square_nonempty(h, what);
    const std::size_t n = h.rows();
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            dev = std::max(dev, std::abs(h(i, j) - std::conj(h(j, i))));
    if (dev > kHermitianTol * max_abs(h)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian (deviation " +
                                    std::to_string(dev) + ")");
    }
    return real_part(h);
}

/// A* A without forming the adjoint; exactly Hermitian entrywise.
std::vector<Complex> gram(const ComplexMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    std::vector<Complex> b(c * c, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < r; ++k) {
        const Complex* row = a.data() + k * c;
        for (std::size_t i = 0; i < c; ++i) {
            const Complex cik = std::conj(row[i]);
            for (std::size_t j = 0; j < c; ++j) b[i * c + j] += cik * row[j];
        }
    }
    return b;
}

/// Golden-section maximization of f on [lo, hi] down to the given window
/// width; returns the best value seen.
template <class F>
double golden_max(F&& f, double lo, double hi, double width) {
    constexpr double kInvPhi = 0.61803398874989484820;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    double best = std::max(f1, f2);
    while (hi - lo > width) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
        best = std::max(best, std::max(f1, f2));
    }
    return best;
}

}  // namespace

namespace detail {

void jacobi_hermitian(Complex* h, std::size_t n, double* w, Complex* v) {
    if (n == 0) return;
    // std::complex<double> is array-compatible with double[2]; the kernel
    // works on the raw view to keep the rotation loops branch-free.
    double* hd = reinterpret_cast<double*>(h);
    if (n == 1) {
        w[0] = hd[0];
        return;
    }
    double* vd = reinterpret_cast<double*>(v);

    double fro_sq = 0.0;
    for (std::size_t k = 0; k < n * n; ++k)
        fro_sq += hd[2 * k] * hd[2 * k] + hd[2 * k + 1] * hd[2 * k + 1];
    const double tol_sq = kJacobiOffTol * kJacobiOffTol * fro_sq;
    // Pivots below this threshold can all be skipped while still guaranteeing
    // the off-diagonal mass target: n(n-1) such entries sum below tol_sq.
    const double skip_sq = tol_sq / double(n * (n - 1));

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const std::size_t k = i * n + j;
                off_sq += hd[2 * k] * hd[2 * k] + hd[2 * k + 1] * hd[2 * k + 1];
            }
        }
        if (off_sq <= tol_sq) {
            for (std::size_t i = 0; i < n; ++i) w[i] = hd[2 * (i * n + i)];
            return;
        }

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const std::size_t pq = p * n + q;
                const double hr = hd[2 * pq], hi = hd[2 * pq + 1];
                const double mag_sq = hr * hr + hi * hi;
                if (mag_sq <= skip_sq) continue;

                const double mag = std::sqrt(mag_sq);
                const double ur = hr / mag, ui = hi / mag;
                const double app = hd[2 * (p * n + p)];
                const double aqq = hd[2 * (q * n + q)];
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double usr = ur * s, usi = ui * s;
                const double ucr = ur * c, uci = ui * c;

                // Rows p and q of V* H: row_p <- c row_p - (u s) row_q,
                // row_q <- s row_p + (u c) row_q.
                double* rp = hd + 2 * p * n;
                double* rq = hd + 2 * q * n;
                for (std::size_t j = 0; j < n; ++j) {
                    const double pr = rp[2 * j], pi = rp[2 * j + 1];
                    const double qr = rq[2 * j], qi = rq[2 * j + 1];
                    rp[2 * j] = c * pr - (usr * qr - usi * qi);
                    rp[2 * j + 1] = c * pi - (usr * qi + usi * qr);
                    rq[2 * j] = s * pr + (ucr * qr - uci * qi);
                    rq[2 * j + 1] = s * pi + (ucr * qi + uci * qr);
                }
                // Columns p and q of (V* H) V: the same combination with
                // conj(u) in place of u.
                for (std::size_t i = 0; i < n; ++i) {
                    double* cp = hd + 2 * (i * n + p);
                    double* cq = hd + 2 * (i * n + q);
                    const double pr = cp[0], pi = cp[1];
                    const double qr = cq[0], qi = cq[1];
                    cp[0] = c * pr - (usr * qr + usi * qi);
                    cp[1] = c * pi - (usr * qi - usi * qr);
                    cq[0] = s * pr + (ucr * qr + uci * qi);
                    cq[1] = s * pi + (ucr * qi - uci * qr);
                }
                // The pivot is zero by construction; pin the rounding noise.
                hd[2 * pq] = hd[2 * pq + 1] = 0.0;
                hd[2 * (q * n + p)] = hd[2 * (q * n + p) + 1] = 0.0;
                hd[2 * (p * n + p) + 1] = 0.0;
                hd[2 * (q * n + q) + 1] = 0.0;

                if (vd != nullptr) {
                    for (std::size_t i = 0; i < n; ++i) {
                        double* cp = vd + 2 * (i * n + p);
                        double* cq = vd + 2 * (i * n + q);
                        const double pr = cp[0], pi = cp[1];
                        const double qr = cq[0], qi = cq[1];
                        cp[0] = c * pr - (usr * qr + usi * qi);
                        cp[1] = c * pi - (usr * qi - usi * qr);
                        cq[0] = s * pr + (ucr * qr + uci * qi);
                        cq[1] = s * pi + (ucr * qi - uci * qr);
                    }
                }
            }
        }
    }
    throw std::runtime_error("jacobi_hermitian: no convergence within " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
}

EigEdges hermitian_edges(Complex* h, std::size_t n) {
    if (n == 1) return {h[0].real(), h[0].real()};
    if (n == 2) {
        const double a = h[0].real(), b = h[3].real();
        const double mid = 0.5 * (a + b);
        const double rad = std::hypot(0.5 * (a - b), std::abs(h[1]));
        return {mid - rad, mid + rad};
    }
    std::vector<double> w(n);
    jacobi_hermitian(h, n, w.data(), nullptr);
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    return {*lo, *hi};
}

double numerical_radius_pq(const ComplexMatrix& p, const ComplexMatrix& q) {
    const std::size_t n = p.rows();
    std::vector<Complex> hbuf(n * n);
    const auto edges_at = [&](double theta) {
        const double ct = std::cos(theta), st = std::sin(theta);
        const Complex* pd = p.data();
        const Complex* qd = q.data();
        for (std::size_t k = 0; k < n * n; ++k) {
            hbuf[k] = Complex(ct * pd[k].real() + st * qd[k].real(),
                              ct * pd[k].imag() + st * qd[k].imag());
        }
        return hermitian_edges(hbuf.data(), n);
    };
    const auto lambda_max_at = [&](double theta) { return edges_at(theta).max; };

    constexpr int m = kSweepSamples;
    constexpr double step = 2.0 * std::numbers::pi / m;
    static_assert(m % 2 == 0);
    std::vector<double> f(m);
    // H(theta + pi) = -H(theta), so one solve covers the antipodal sample via
    // the bottom of the spectrum.
    for (int k = 0; k < m / 2; ++k) {
        const EigEdges e = edges_at(step * k);
        f[k] = e.max;
        f[k + m / 2] = -e.min;
    }

    std::vector<int> peaks;
    for (int k = 0; k < m; ++k) {
        const double prev = f[(k + m - 1) % m];
        const double next = f[(k + 1) % m];
        if (f[k] >= prev && f[k] >= next) peaks.push_back(k);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
        if (f[a] != f[b]) return f[a] > f[b];
        return a < b;
    });
    if (peaks.size() > static_cast<std::size_t>(kSweepRefineCount))
        peaks.resize(kSweepRefineCount);

    double best = *std::max_element(f.begin(), f.end());
    for (int k : peaks) {
        const double refined =
            golden_max(lambda_max_at, step * (k - 1), step * (k + 1), kSweepRefineWidth);
        best = std::max(best, refined);
    }
    return best;
}

}  // namespace detail

HermitianEig hermitian_eig(const ComplexMatrix& h) {
    ComplexMatrix s = checked_symmetrize(h, "hermitian_eig");
    const std::size_t n = s.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    std::vector<double> w(n);
    detail::jacobi_hermitian(s.data(), n, w.data(), v.data());

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    ComplexMatrix s = checked_symmetrize(h, "hermitian_eigenvalues");
    const std::size_t n = s.rows();
    std::vector<double> w(n);
    detail::jacobi_hermitian(s.data(), n, w.data(), nullptr);
    std::sort(w.begin(), w.end());
    return w;
}

double operator_norm(const ComplexMatrix& a) {
    if (a.empty()) throw std::invalid_argument("operator_norm: matrix must be nonempty");
    std::vector<Complex> b = gram(a);
    const detail::EigEdges e = detail::hermitian_edges(b.data(), a.cols());
    return std::sqrt(std::max(e.max, 0.0));
}

ComplexMatrix psd_power(const ComplexMatrix& p, double s) {
    if (!std::isfinite(s) || s < 0.0) {
        throw std::invalid_argument("psd_power: exponent must be finite and nonnegative");
    }
    const HermitianEig he = hermitian_eig(p);
    const std::size_t n = he.eigenvalues.size();
    const double lmax = he.eigenvalues.back();
    const double floor = -kPsdClamp * lmax;
    std::vector<double> powered(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = he.eigenvalues[i];
        if (lam < floor) {
            throw std::invalid_argument("psd_power: matrix is not positive semidefinite "
                                        "(eigenvalue " + std::to_string(lam) + ")");
        }
        powered[i] = std::pow(std::max(lam, 0.0), s);
    }
    ComplexMatrix scaled(n, n);  // V diag(powered)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = he.vectors(i, j) * powered[j];
    // Symmetrize away the rounding skew so downstream Hermitian checks are
    // exact.
    return real_part(matmul(scaled, adjoint(he.vectors)));
}

ComplexMatrix abs_value(const ComplexMatrix& a) {
    if (a.empty()) throw std::invalid_argument("abs_value: matrix must be nonempty");
    const std::size_t n = a.cols();
    std::vector<Complex> b = gram(a);
    ComplexMatrix g(n, n);
    std::copy(b.begin(), b.end(), g.data());
    return psd_power(g, 0.5);
}

double numerical_radius(const ComplexMatrix& a) {
    require_square_nonempty(a, "numerical_radius");
    if (max_abs(a) == 0.0) return 0.0;
    return detail::numerical_radius_pq(real_part(a), imag_part(a));
}

double spectral_radius(const ComplexMatrix& a) {
    require_square_nonempty(a, "spectral_radius");
    ComplexMatrix m = a;
    double log_r = 0.0;
    for (int k = 0; k < kRadiusMaxIter; ++k) {
        const double nk = operator_norm(m);
        if (nk < kRadiusUnderflow) return 0.0;  // squaring crushed the iterate: r = 0
        const double term = std::ldexp(std::log(nk), -k);
        log_r += term;
        // The tail after a small increment is provably smaller; k = 0 is
        // excluded because a unit-norm start says nothing about the limit.
        if (k >= 1 && std::abs(term) < kRadiusIncrementTol) break;
        if (k + 1 == kRadiusMaxIter) break;
        const double inv = 1.0 / nk;
        for (std::size_t e = 0; e < m.rows() * m.cols(); ++e) m.data()[e] *= inv;
        m = matmul(m, m);
    }
    return std::exp(log_r);
}

SpectralSummary spectral_summary(const ComplexMatrix& a) {
    require_square_nonempty(a, "spectral_summary");
    SpectralSummary out;
    out.numerical_radius = numerical_radius(a);
    out.operator_norm = operator_norm(a);
    out.spectral_radius = spectral_radius(a);
    return out;
}

}  // namespace nrb
