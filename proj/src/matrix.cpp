#include "qols/matrix.hpp"

#include <cmath>

#include "json.hpp"

namespace qols {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("ComplexMatrix: size mismatch in product");
    ComplexMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Complex v = at(r, k);
            if (v == Complex{}) continue;
            for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("ComplexMatrix: trace of non-square matrix");
    Complex t = 0.0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool ComplexMatrix::is_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

std::vector<Complex> ComplexMatrix::row(int r) const {
    return {data_.begin() + static_cast<size_t>(r) * cols_,
            data_.begin() + static_cast<size_t>(r + 1) * cols_};
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_distance: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.entries().size(); ++i) s += std::norm(a.entries()[i] - b.entries()[i]);
    return std::sqrt(s);
}

double BipartiteState::norm() const {
    double s = 0.0;
    for (const Complex& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

Complex inner_product(const BipartiteState& u, const BipartiteState& v) {
    if (u.amplitudes.size() != v.amplitudes.size())
        throw std::invalid_argument("inner_product: size mismatch");
    Complex s = 0.0;
    for (size_t i = 0; i < u.amplitudes.size(); ++i) s += std::conj(u.amplitudes[i]) * v.amplitudes[i];
    return s;
}

std::string to_json(const ComplexMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::json::array();
    for (const Complex& z : m.entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (rows <= 0 || cols <= 0 || entries.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("matrix_from_json: entry count does not match dimensions");
    ComplexMatrix m(rows, cols);
    for (size_t i = 0; i < entries.size(); ++i)
        m.entries()[i] = Complex(entries[i].at(0).get<double>(), entries[i].at(1).get<double>());
    if (!m.is_finite()) throw std::invalid_argument("matrix_from_json: non-finite entry");
    return m;
}

}  // namespace qols
