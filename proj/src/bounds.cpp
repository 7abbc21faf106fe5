#include "nrb/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nrb/spectra.hpp"

namespace nrb {

namespace {

void require_nonempty(const ComplexMatrix& a, const char* what) {
    if (a.empty()) throw std::invalid_argument(std::string(what) + ": matrix must be nonempty");
}

/// A* A, exactly Hermitian entrywise.
ComplexMatrix gram_of(const ComplexMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    ComplexMatrix b(c, c);
    for (std::size_t k = 0; k < r; ++k) {
        const Complex* row = a.data() + k * c;
        for (std::size_t i = 0; i < c; ++i) {
            const Complex cik = std::conj(row[i]);
            for (std::size_t j = 0; j < c; ++j) b(i, j) += cik * row[j];
        }
    }
    return b;
}

/// A A*, exactly Hermitian entrywise.
ComplexMatrix cogram_of(const ComplexMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    ComplexMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const Complex* ri = a.data() + i * c;
        for (std::size_t j = 0; j < r; ++j) {
            const Complex* rj = a.data() + j * c;
            Complex sum(0.0, 0.0);
            for (std::size_t k = 0; k < c; ++k) sum += ri[k] * std::conj(rj[k]);
            b(i, j) = sum;
        }
    }
    return b;
}

struct PsdParts {
    ComplexMatrix root;  // G^{1/2}
    double norm = 0.0;   // sqrt(lambda_max(G)), the norm of G's factor
};

/// Square root of a Gram matrix through one eigendecomposition; rounding
/// negativity is clamped to zero (a Gram matrix is PSD in exact arithmetic).
PsdParts psd_root(const ComplexMatrix& g) {
    const HermitianEig he = hermitian_eig(g);
    const std::size_t n = he.eigenvalues.size();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = std::sqrt(std::max(he.eigenvalues[i], 0.0));
    ComplexMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = he.vectors(i, j) * roots[j];
    PsdParts out;
    out.root = real_part(matmul(scaled, adjoint(he.vectors)));
    out.norm = roots.back();
    return out;
}

/// The recurring ingredients of the pair-style bounds for X: Ha -> Hb and
/// Y: Hb -> Ha: the cross factor w(|X|+i|Y*|) w(|X*|+i|Y|), the norms, the
/// product radius w(YX), and the averaged Gram norm 0.5 || |X|^2 + |Y*|^2 ||.
struct PairPieces {
    double cross = 0.0;
    double norm_x = 0.0;
    double norm_y = 0.0;
    double w_yx = 0.0;
    double half_gram = 0.0;
};

PairPieces pair_pieces(const ComplexMatrix& x, const ComplexMatrix& y) {
    const ComplexMatrix gx = gram_of(x);    // |X|^2 on Ha
    const ComplexMatrix cys = cogram_of(y); // |Y*|^2 on Ha
    const PsdParts px = psd_root(gx);
    const PsdParts pys = psd_root(cys);
    const PsdParts pxs = psd_root(cogram_of(x));
    const PsdParts py = psd_root(gram_of(y));
    PairPieces out;
    out.cross = detail::numerical_radius_pq(px.root, pys.root) *
                detail::numerical_radius_pq(pxs.root, py.root);
    out.norm_x = px.norm;
    out.norm_y = py.norm;
    out.w_yx = numerical_radius(matmul(y, x));
    out.half_gram = 0.5 * operator_norm(gx + cys);
    return out;
}

}  // namespace

PairBoundReport pair_bounds(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_nonempty(a, "pair_bounds");
    require_nonempty(b, "pair_bounds");
    if (a.rows() != b.cols() || a.cols() != b.rows()) {
        throw std::invalid_argument("pair_bounds: A must map H1 to H2 and B back (got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " and " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
    const PairPieces p = pair_pieces(a, b);
    PairBoundReport out;
    out.lemma21 = std::sqrt(p.cross + p.norm_x * p.norm_y + p.w_yx);
    out.lemma22 = std::sqrt(p.cross + p.half_gram + p.w_yx);
    out.reference =
        std::sqrt((p.norm_x + p.norm_y) * (p.norm_x + p.norm_y) - (p.norm_x * p.norm_y - p.w_yx));
    return out;
}

double inner_sum(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& x,
                 const ComplexVector& y) {
    require_nonempty(a, "inner_sum");
    require_nonempty(b, "inner_sum");
    if (a.rows() != b.cols() || a.cols() != b.rows() || x.dim() != a.cols() ||
        y.dim() != a.rows()) {
        throw std::invalid_argument("inner_sum: shapes must conform (A maps x-space to y-space)");
    }
    return std::abs(inner_product(matvec(a, x), y)) + std::abs(inner_product(matvec(b, y), x));
}

BlockBoundReport block_bounds(const BlockMatrix& t) {
    const std::size_t n = t.n();
    BlockBoundReport out;
    out.alpha = ComplexMatrix(n, n);
    out.beta = ComplexMatrix(n, n);
    out.abu_omar = ComplexMatrix(n, n);
    out.hou = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double wii = numerical_radius(t.block(i, i));
        out.alpha(i, i) = wii;
        out.beta(i, i) = wii;
        out.abu_omar(i, i) = wii;
        out.hou(i, i) = operator_norm(t.block(i, i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const PairPieces p = pair_pieces(t.block(i, j), t.block(j, i));
            out.alpha(i, j) = std::sqrt(p.cross + p.norm_x * p.norm_y + p.w_yx);
            out.beta(i, j) = std::sqrt(p.cross + p.half_gram + p.w_yx);
            out.abu_omar(i, j) = p.norm_x;
            out.abu_omar(j, i) = p.norm_y;
            out.hou(i, j) = p.norm_x;
            out.hou(j, i) = p.norm_y;
        }
    }
    out.omega_alpha = numerical_radius(out.alpha);
    out.omega_beta = numerical_radius(out.beta);
    out.omega_abu_omar = numerical_radius(out.abu_omar);
    out.omega_hou = operator_norm(out.hou);
    return out;
}

TwoByTwoBoundReport two_by_two_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const ComplexMatrix& c, const ComplexMatrix& d) {
    require_nonempty(a, "two_by_two_bounds");
    require_nonempty(b, "two_by_two_bounds");
    require_nonempty(c, "two_by_two_bounds");
    require_nonempty(d, "two_by_two_bounds");
    if (!a.is_square() || !d.is_square()) {
        throw std::invalid_argument("two_by_two_bounds: diagonal blocks must be square");
    }
    const std::size_t d1 = a.rows(), d2 = d.rows();
    if (b.rows() != d1 || b.cols() != d2 || c.rows() != d2 || c.cols() != d1) {
        throw std::invalid_argument("two_by_two_bounds: off-diagonal blocks must map between "
                                    "the two diagonal spaces");
    }
    const double wa = numerical_radius(a);
    const double wd = numerical_radius(d);
    const PairPieces p = pair_pieces(b, c);
    const double spread = (wa - wd) * (wa - wd);
    TwoByTwoBoundReport out;
    out.cor1 = 0.5 * (wa + wd) + 0.5 * std::sqrt(spread + p.cross + p.norm_x * p.norm_y + p.w_yx);
    out.cor2 = 0.5 * (wa + wd) + 0.5 * std::sqrt(spread + p.cross + p.half_gram + p.w_yx);
    if (d1 == d2) {
        out.hirzallah = std::max(wa, wd) +
                        0.5 * (numerical_radius(b + c) + numerical_radius(b - c));
    }
    const ComplexMatrix s1 = ComplexMatrix::identity(d1) + cogram_of(a) + cogram_of(b);
    const ComplexMatrix s2 = ComplexMatrix::identity(d2) + cogram_of(c) + cogram_of(d);
    out.shebrawi3 = 0.5 * wa + 0.5 * wd + 0.25 * operator_norm(s1) + 0.25 * operator_norm(s2);
    return out;
}

RowBoundReport row_bounds(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_nonempty(a, "row_bounds");
    require_nonempty(b, "row_bounds");
    if (!a.is_square() || b.rows() != a.rows()) {
        throw std::invalid_argument("row_bounds: A must be square with B.rows = A.rows");
    }
    const double wa = numerical_radius(a);
    const double nb = operator_norm(b);
    RowBoundReport out;
    out.sh1 = 0.5 * (wa + std::sqrt(wa * wa + nb * nb));
    out.sh2 = 0.5 * (operator_norm(a) + std::sqrt(operator_norm(cogram_of(a) + cogram_of(b))));
    return out;
}

SelfBoundReport self_bounds(const ComplexMatrix& t) {
    require_nonempty(t, "self_bounds");
    if (!t.is_square()) throw std::invalid_argument("self_bounds: matrix must be square");
    const ComplexMatrix gt = gram_of(t);    // |T|^2
    const ComplexMatrix ct = cogram_of(t);  // |T*|^2
    const PsdParts pt = psd_root(gt);
    const PsdParts pts = psd_root(ct);
    const double w1 = detail::numerical_radius_pq(pt.root, pts.root);
    const double wt2 = numerical_radius(matmul(t, t));
    SelfBoundReport out;
    out.norm = pt.norm;
    out.c7 = 0.5 * std::sqrt(w1 * w1 + pt.norm * pt.norm + wt2);
    out.c8 = 0.5 * std::sqrt(w1 * w1 + 0.5 * operator_norm(gt + ct) + wt2);
    out.kittaneh = 0.5 * operator_norm(pt.root + pts.root);
    return out;
}

SpectralSumBoundReport spectral_sum_bounds(const std::vector<ComplexMatrix>& as,
                                           const std::vector<ComplexMatrix>& bs) {
    const std::size_t n = as.size();
    if (n == 0 || bs.size() != n) {
        throw std::invalid_argument("spectral_sum_bounds: lists must be nonempty and equal length");
    }
    const std::size_t d1 = as[0].rows();
    for (std::size_t i = 0; i < n; ++i) {
        require_nonempty(as[i], "spectral_sum_bounds");
        require_nonempty(bs[i], "spectral_sum_bounds");
        if (as[i].rows() != d1 || bs[i].cols() != d1 || bs[i].rows() != as[i].cols()) {
            throw std::invalid_argument(
                "spectral_sum_bounds: A[" + std::to_string(i) + "] must map H_" +
                std::to_string(i) + " into H1 and B[" + std::to_string(i) + "] back");
        }
    }
    SpectralSumBoundReport out;
    out.gamma = ComplexMatrix(n, n);
    out.lambda = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double wii = numerical_radius(matmul(bs[i], as[i]));
        out.gamma(i, i) = wii;
        out.lambda(i, i) = wii;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const ComplexMatrix x = matmul(bs[i], as[j]);
            const ComplexMatrix y = matmul(bs[j], as[i]);
            const PairPieces p = pair_pieces(x, y);
            out.gamma(i, j) = std::sqrt(p.cross + p.norm_x * p.norm_y + p.w_yx);
            out.lambda(i, j) = std::sqrt(p.cross + p.half_gram + p.w_yx);
        }
    }
    out.omega_gamma = numerical_radius(out.gamma);
    out.omega_lambda = numerical_radius(out.lambda);
    ComplexMatrix sum(d1, d1);
    for (std::size_t i = 0; i < n; ++i) sum = sum + matmul(as[i], bs[i]);
    out.r_direct = spectral_radius(sum);
    return out;
}

}  // namespace nrb
