#include "nrb/matrix.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nrb {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw std::invalid_argument("from_rows: ragged row " + std::to_string(i));
        }
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    require_finite(m, "from_rows");
    return m;
}

ComplexVector ComplexVector::from_entries(const std::vector<Complex>& entries) {
    ComplexVector x(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) x[i] = entries[i];
    require_finite(x, "from_entries");
    return x;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix out(a.rows(), a.cols());
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) out.data()[k] = a.data()[k] + b.data()[k];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix out(a.rows(), a.cols());
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) out.data()[k] = a.data()[k] - b.data()[k];
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) out.data()[k] = scale * a.data()[k];
    return out;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& a) {
    return Complex(scale, 0.0) * a;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix real_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("real_part: matrix must be square");
    ComplexMatrix out(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return out;
}

ComplexMatrix imag_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("imag_part: matrix must be square");
    // (A - A*)/(2i) = -i/2 (A - A*)
    ComplexMatrix out(a.rows(), a.rows());
    const Complex half_over_i(0.0, -0.5);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            out(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: shape mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            const Complex* brow = b.data() + k * b.cols();
            Complex* orow = out.data() + i * b.cols();
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
    if (a.cols() != x.dim()) {
        throw std::invalid_argument("matvec: shape mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * dim " +
                                    std::to_string(x.dim()) + ")");
    }
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex sum(0.0, 0.0);
        const Complex* row = a.data() + i * a.cols();
        for (std::size_t j = 0; j < a.cols(); ++j) sum += row[j] * x[j];
        out[i] = sum;
    }
    return out;
}

Complex inner_product(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch (" +
                                    std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) +
                                    ")");
    }
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < x.dim(); ++i) sum += x[i] * std::conj(y[i]);
    return sum;
}

double norm(const ComplexVector& x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) sum += std::norm(x[i]);
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) sum += std::norm(a.data()[k]);
    return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& a) {
    double best = 0.0;
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, std::abs(a.data()[k]));
    return best;
}

void require_finite(const ComplexMatrix& a, const char* what) {
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex v = a.data()[k];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument(std::string(what) + ": non-finite matrix entry");
        }
    }
}

void require_finite(const ComplexVector& x, const char* what) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (!std::isfinite(x[i].real()) || !std::isfinite(x[i].imag())) {
            throw std::invalid_argument(std::string(what) + ": non-finite vector entry");
        }
    }
}

std::size_t BlockMatrix::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

BlockMatrix make_block_matrix(std::vector<std::size_t> dims, std::vector<ComplexMatrix> blocks) {
    const std::size_t n = dims.size();
    if (n == 0) throw std::invalid_argument("make_block_matrix: empty partition");
    for (std::size_t i = 0; i < n; ++i) {
        if (dims[i] == 0) {
            throw std::invalid_argument("make_block_matrix: block size " + std::to_string(i) +
                                        " must be positive");
        }
    }
    if (blocks.size() != n * n) {
        throw std::invalid_argument("make_block_matrix: expected " + std::to_string(n * n) +
                                    " blocks, got " + std::to_string(blocks.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ComplexMatrix& b = blocks[i * n + j];
            if (b.rows() != dims[i] || b.cols() != dims[j]) {
                throw std::invalid_argument(
                    "make_block_matrix: block (" + std::to_string(i) + "," + std::to_string(j) +
                    ") has shape " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                    ", expected " + std::to_string(dims[i]) + "x" + std::to_string(dims[j]));
            }
        }
    }
    BlockMatrix t;
    t.dims = std::move(dims);
    t.blocks = std::move(blocks);
    return t;
}

ComplexMatrix assemble(const BlockMatrix& t) {
    const std::size_t total = t.total_dim();
    ComplexMatrix out(total, total);
    std::vector<std::size_t> offset(t.n() + 1, 0);
    for (std::size_t i = 0; i < t.n(); ++i) offset[i + 1] = offset[i] + t.dims[i];
    for (std::size_t i = 0; i < t.n(); ++i) {
        for (std::size_t j = 0; j < t.n(); ++j) {
            const ComplexMatrix& b = t.block(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out(offset[i] + r, offset[j] + c) = b(r, c);
        }
    }
    return out;
}

BlockMatrix split(const ComplexMatrix& a, const std::vector<std::size_t>& dims) {
    if (!a.is_square()) throw std::invalid_argument("split: matrix must be square");
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
    if (total != a.rows()) {
        throw std::invalid_argument("split: block sizes sum to " + std::to_string(total) +
                                    ", matrix has size " + std::to_string(a.rows()));
    }
    const std::size_t n = dims.size();
    if (n == 0) throw std::invalid_argument("split: empty partition");
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (dims[i] == 0) {
            throw std::invalid_argument("split: block size " + std::to_string(i) +
                                        " must be positive");
        }
        offset[i + 1] = offset[i] + dims[i];
    }
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix b(dims[i], dims[j]);
            for (std::size_t r = 0; r < dims[i]; ++r)
                for (std::size_t c = 0; c < dims[j]; ++c)
                    b(r, c) = a(offset[i] + r, offset[j] + c);
            blocks.push_back(std::move(b));
        }
    }
    return make_block_matrix(dims, std::move(blocks));
}

}  // namespace nrb
