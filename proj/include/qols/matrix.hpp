#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qols {

using Complex = std::complex<double>;

/// Bipartite factorization (d_a, d_b) of an ambient dimension d_a * d_b.
struct BipartiteShape {
    int dim_a = 1;
    int dim_b = 1;

    int total() const { return dim_a * dim_b; }
    bool operator==(const BipartiteShape&) const = default;
};

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Complex& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<Complex>& entries() const { return data_; }
    std::vector<Complex>& entries() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    Complex trace() const;

    /// All entries finite (no NaN/inf in either component).
    bool is_finite() const;

    /// Row r viewed as a vector.
    std::vector<Complex> row(int r) const;

    bool operator==(const ComplexMatrix&) const = default;

  private:
    int rows_, cols_;
    std::vector<Complex> data_;
};

/// Frobenius norm of the difference a - b (or of a, with b omitted).
double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Vector in a d_a*d_b dimensional space tagged with its factorization.
struct BipartiteState {
    BipartiteShape shape;
    std::vector<Complex> amplitudes;

    double norm() const;
    /// Amplitude of |k l>, composite index k*d_b + l.
    const Complex& at(int k, int l) const { return amplitudes[static_cast<size_t>(k) * shape.dim_b + l]; }
    Complex& at(int k, int l) { return amplitudes[static_cast<size_t>(k) * shape.dim_b + l]; }
};

Complex inner_product(const BipartiteState& u, const BipartiteState& v);

// JSON serialization shared with the CLI:
//   {"rows": r, "cols": c, "entries": [[re, im], ...]}  (row-major)
std::string to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

}  // namespace qols
