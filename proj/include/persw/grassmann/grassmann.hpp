#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace persw::grassmann {

/// Dense row-major real matrix, sized for the small m x m blocks used here.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    /// Rows x cols from a flat row-major buffer.
    static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const double> flat() const noexcept { return data_; }

    Matrix transpose() const;
    /// (A + A^T) / 2
    Matrix symmetric_part() const;
    double frobenius_norm() const noexcept;
    double trace() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double frobenius_distance(const Matrix& a, const Matrix& b);

/// A point of R^n x M(R^m).
struct MatrixPoint {
    std::vector<double> x;
    Matrix a;
};

/// Eigenvalues in decreasing order, eigenvectors as the matching columns of an
/// orthogonal matrix.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;
    int sweeps = 0;

    std::vector<double> vector(std::size_t i) const;
    /// vectors · diag(values) · vectors^T
    Matrix reconstruct() const;
};

/// An orthogonal projection matrix of rank d.
struct GrassmannPoint {
    Matrix projector;
    int d = 0;
};

/// Absolute eigen-gap below which the projection onto G_d is treated as undefined.
inline constexpr double medial_gap_tolerance = 1e-9;

/// sqrt(|x_a - x_b|^2 + gamma^2 |A_a - A_b|_F^2).
/// Throws InvalidArgument for gamma <= 0 or mismatched dimensions.
double gamma_dist(const MatrixPoint& a, const MatrixPoint& b, double gamma);

/// Cyclic Jacobi eigensolver for a symmetric matrix. Stops when the off-diagonal
/// Frobenius mass is <= 1e-12 |S|_F, after at most 100 sweeps. Each eigenvector's
/// largest-magnitude entry is made positive.
/// Throws InvalidArgument for a non-square or non-symmetric input.
EigenDecomposition jacobi_eigh(const Matrix& s);

/// Nearest point of G_d(R^m) to A in Frobenius norm: O J_d O^T for the eigenvectors
/// O of (A + A^T)/2, keeping the top d eigenvalues.
/// Throws MedialAxisError when lambda_d - lambda_{d+1} <= medial_gap_tolerance and
/// InvalidArgument when d is not in [1, m).
GrassmannPoint project_grassmannian(const Matrix& a, int d);

/// Distance from A to the medial axis of G_d(R^m): (sqrt 2 / 2) |lambda_d - lambda_{d+1}|
/// of the symmetric part. Throws InvalidArgument when d is not in [1, m).
double medial_distance(const Matrix& a, int d);

/// gamma times the smallest medial distance over the matrix parts of `points`.
/// Throws InvalidArgument for an empty cloud or gamma <= 0.
double tmax(std::span<const MatrixPoint> points, int d, double gamma);

/// v v^T / |v|^2. Throws InvalidArgument when |v| <= 1e-12.
GrassmannPoint line_projector(std::span<const double> v);

/// Unit eigenvector for the largest eigenvalue of the symmetric part of A.
std::vector<double> top_eigenvector(const Matrix& a);

}  // namespace persw::grassmann
