#include "qols/tensor_ops.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace qols {

namespace {

void require_square_shape(const ComplexMatrix& m, BipartiteShape shape, const char* op) {
    if (!m.is_square() || m.rows() != shape.total())
        throw std::invalid_argument(std::string(op) + ": matrix size does not match shape");
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) e(r, c) = m.at(r, c);
    return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
    ComplexMatrix m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int r = 0; r < e.rows(); ++r)
        for (int c = 0; c < e.cols(); ++c) m.at(r, c) = e(r, c);
    return m;
}

}  // namespace

ComplexMatrix reshuffle(const ComplexMatrix& m, BipartiteShape shape) {
    require_square_shape(m, shape, "reshuffle");
    if (shape.dim_a != shape.dim_b)
        throw std::invalid_argument("reshuffle: requires d_a == d_b");
    const int d = shape.dim_a;
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) out.at(d * i + l, d * k + j) = m.at(d * i + j, d * k + l);
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteShape shape) {
    require_square_shape(m, shape, "partial_transpose");
    if (shape.dim_a != shape.dim_b)
        throw std::invalid_argument("partial_transpose: requires d_a == d_b");
    const int d = shape.dim_a;
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) out.at(d * i + j, d * k + l) = m.at(d * i + k, d * j + l);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteShape shape, Subsystem which) {
    require_square_shape(m, shape, "partial_trace");
    const int da = shape.dim_a, db = shape.dim_b;
    if (which == Subsystem::A) {
        ComplexMatrix out(db, db);
        for (int j = 0; j < db; ++j)
            for (int l = 0; l < db; ++l)
                for (int i = 0; i < da; ++i) out.at(j, l) += m.at(db * i + j, db * i + l);
        return out;
    }
    ComplexMatrix out(da, da);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < da; ++k)
            for (int j = 0; j < db; ++j) out.at(i, k) += m.at(db * i + j, db * k + j);
    return out;
}

double unitarity_deficit(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("unitarity_deficit: non-square matrix");
    const int n = m.rows();
    double s = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Complex g = 0.0;
            for (int k = 0; k < n; ++k) g += std::conj(m.at(k, r)) * m.at(k, c);
            if (r == c) g -= 1.0;
            s += std::norm(g);
        }
    }
    return std::sqrt(s);
}

std::vector<double> schmidt_values(const BipartiteState& v, double norm_tolerance) {
    const int da = v.shape.dim_a, db = v.shape.dim_b;
    if (v.amplitudes.size() != static_cast<size_t>(da) * db)
        throw std::invalid_argument("schmidt_values: amplitude count does not match shape");
    if (std::abs(v.norm() - 1.0) > norm_tolerance)
        throw std::invalid_argument("schmidt_values: state is not normalized");
    Eigen::MatrixXcd coeff(da, db);
    for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) coeff(k, l) = v.at(k, l);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;  // Eigen returns them in descending order
}

ComplexMatrix polar_unitary(const ComplexMatrix& m, double rank_tolerance) {
    if (!m.is_square()) throw std::invalid_argument("polar_unitary: non-square matrix");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    if (sv.size() == 0 || sv(sv.size() - 1) < rank_tolerance * scale)
        throw std::invalid_argument("polar_unitary: rank-deficient input");
    return from_eigen(svd.matrixU() * svd.matrixV().adjoint());
}

}  // namespace qols
