#include "persw/grassmann/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "persw/error.hpp"

namespace persw::grassmann {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, std::span<const double> values) {
    if (values.size() != rows * cols) throw InvalidArgument("flat buffer does not match matrix shape");
    Matrix m(rows, cols);
    std::ranges::copy(values, m.data_.begin());
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::symmetric_part() const {
    if (!is_square()) throw InvalidArgument("symmetric part of a non-square matrix");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return s;
}

double Matrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

double Matrix::trace() const {
    if (!is_square()) throw InvalidArgument("trace of a non-square matrix");
    double t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidArgument("matrix shapes differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidArgument("matrix shapes differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shapes do not agree");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }

std::vector<double> EigenDecomposition::vector(std::size_t i) const {
    std::vector<double> v(vectors.rows());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = vectors(r, i);
    return v;
}

Matrix EigenDecomposition::reconstruct() const {
    const std::size_t n = values.size();
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += values[k] * vectors(i, k) * vectors(j, k);
    return out;
}

double gamma_dist(const MatrixPoint& a, const MatrixPoint& b, double gamma) {
    if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
    if (a.x.size() != b.x.size() || a.a.rows() != b.a.rows() || a.a.cols() != b.a.cols())
        throw InvalidArgument("points have different dimensions");
    double dx = 0.0;
    for (std::size_t i = 0; i < a.x.size(); ++i) dx += (a.x[i] - b.x[i]) * (a.x[i] - b.x[i]);
    double da = 0.0;
    auto fa = a.a.flat(), fb = b.a.flat();
    for (std::size_t i = 0; i < fa.size(); ++i) da += (fa[i] - fb[i]) * (fa[i] - fb[i]);
    return std::sqrt(dx + gamma * gamma * da);
}

EigenDecomposition jacobi_eigh(const Matrix& s) {
    if (!s.is_square()) throw InvalidArgument("eigendecomposition of a non-square matrix");
    const std::size_t n = s.rows();
    const double norm = s.frobenius_norm();
    if ((s - s.transpose()).frobenius_norm() > 1e-9 * (1.0 + norm))
        throw InvalidArgument("eigendecomposition of a non-symmetric matrix");

    Matrix a = s.symmetric_part();
    Matrix v = Matrix::identity(n);
    constexpr int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
        if (std::sqrt(off) <= 1e-12 * norm) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps) throw Error("Jacobi iteration did not converge in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::stable_sort(order, [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.values[k] = a(src, src);
        std::size_t big = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(big, src))) big = r;
        const double sign = v(big, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = sign * v(r, src);
    }
    return out;
}

namespace {

void check_rank(const Matrix& a, int d) {
    if (!a.is_square()) throw InvalidArgument("expected a square matrix");
    if (d < 1 || static_cast<std::size_t>(d) >= a.rows())
        throw InvalidArgument("Grassmannian dimension d = " + std::to_string(d) + " not in [1, " +
                              std::to_string(a.rows()) + ")");
}

}  // namespace

GrassmannPoint project_grassmannian(const Matrix& a, int d) {
    check_rank(a, d);
    const auto eig = jacobi_eigh(a.symmetric_part());
    const double gap = eig.values[d - 1] - eig.values[d];
    if (gap <= medial_gap_tolerance)
        throw MedialAxisError("matrix lies on the medial axis of G_" + std::to_string(d) +
                              " (eigen-gap " + std::to_string(gap) + ")");
    const std::size_t m = a.rows();
    GrassmannPoint p{Matrix(m, m), d};
    for (int k = 0; k < d; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) p.projector(i, j) += eig.vectors(i, k) * eig.vectors(j, k);
    return p;
}

double medial_distance(const Matrix& a, int d) {
    check_rank(a, d);
    const auto eig = jacobi_eigh(a.symmetric_part());
    return std::sqrt(2.0) / 2.0 * std::abs(eig.values[d - 1] - eig.values[d]);
}

double tmax(std::span<const MatrixPoint> points, int d, double gamma) {
    if (points.empty()) throw InvalidArgument("t_max of an empty cloud");
    if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) best = std::min(best, medial_distance(p.a, d));
    return gamma * best;
}

GrassmannPoint line_projector(std::span<const double> v) {
    double n2 = 0.0;
    for (double x : v) n2 += x * x;
    if (std::sqrt(n2) <= 1e-12) throw InvalidArgument("line direction is (numerically) zero");
    const std::size_t m = v.size();
    GrassmannPoint p{Matrix(m, m), 1};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) p.projector(i, j) = v[i] * v[j] / n2;
    return p;
}

std::vector<double> top_eigenvector(const Matrix& a) {
    if (!a.is_square() || a.rows() == 0) throw InvalidArgument("expected a nonempty square matrix");
    return jacobi_eigh(a.symmetric_part()).vector(0);
}

}  // namespace persw::grassmann
