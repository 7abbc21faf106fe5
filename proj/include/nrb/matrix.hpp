#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nrb {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite doubles;
/// constructors that accept external data validate this.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    /// Build from nested rows; throws std::invalid_argument on ragged or
    /// non-finite input.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Dense complex vector with the same finiteness contract as ComplexMatrix.
class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : data_(dim) {}

    static ComplexVector from_entries(const std::vector<Complex>& entries);

    std::size_t dim() const { return data_.size(); }
    Complex& operator[](std::size_t i) { return data_[i]; }
    const Complex& operator[](std::size_t i) const { return data_[i]; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

private:
    std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
ComplexMatrix operator*(double scale, const ComplexMatrix& a);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Hermitian real part (A + A*)/2; requires a square matrix.
ComplexMatrix real_part(const ComplexMatrix& a);

/// Hermitian imaginary part (A - A*)/(2i); requires a square matrix.
ComplexMatrix imag_part(const ComplexMatrix& a);

/// Matrix product; throws std::invalid_argument on a shape mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix-vector product.
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);

/// Inner product <x, y> = sum_i x_i * conj(y_i), linear in the first slot.
Complex inner_product(const ComplexVector& x, const ComplexVector& y);

double norm(const ComplexVector& x);

double frobenius_norm(const ComplexMatrix& a);

/// Largest entry magnitude, max_ij |a_ij|.
double max_abs(const ComplexMatrix& a);

/// Throws std::invalid_argument naming `what` if any component is not finite.
void require_finite(const ComplexMatrix& a, const char* what);
void require_finite(const ComplexVector& x, const char* what);

/// Tiled square matrix: dims[i] is the size of the i-th diagonal space and
/// block (i, j) maps space j into space i, so it has shape dims[i] x dims[j].
struct BlockMatrix {
    std::vector<std::size_t> dims;
    std::vector<ComplexMatrix> blocks;  // row-major n() x n() grid

    std::size_t n() const { return dims.size(); }
    const ComplexMatrix& block(std::size_t i, std::size_t j) const { return blocks[i * n() + j]; }
    ComplexMatrix& block(std::size_t i, std::size_t j) { return blocks[i * n() + j]; }

    /// Total dimension sum(dims).
    std::size_t total_dim() const;
};

/// Assemble a validated block matrix; every dims[i] must be positive and each
/// grid entry must have shape dims[i] x dims[j].
BlockMatrix make_block_matrix(std::vector<std::size_t> dims,
                              std::vector<ComplexMatrix> blocks);

/// Flatten a block matrix into one dense matrix of size total_dim().
ComplexMatrix assemble(const BlockMatrix& t);

/// Partition a square matrix along the given diagonal block sizes; the sizes
/// must sum to a.rows().
BlockMatrix split(const ComplexMatrix& a, const std::vector<std::size_t>& dims);

}  // namespace nrb
