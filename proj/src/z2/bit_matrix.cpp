#include "persw/z2/bit_matrix.hpp"

#include <bit>
#include <string>

#include "persw/error.hpp"

namespace persw::z2 {

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
}

void BitVector::set(std::size_t i, bool value) {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value)
        words_[i / word_bits] |= mask;
    else
        words_[i / word_bits] &= ~mask;
}

bool BitVector::none() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVector::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::first_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        word_type w = words_[k];
        while (w) {
            out.push_back(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw InvalidArgument("bit vector sizes differ");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("ragged bit matrix literal");
        rows_.emplace_back(r);
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols_)
        throw InvalidArgument("bit matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") out of bounds");
    return rows_[r].get(c);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows() || c >= cols_)
        throw InvalidArgument("bit matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") out of bounds");
    rows_[r].set(c, value);
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        const auto& a = rows_[r].words();
        const auto& b = x.words();
        BitVector::word_type acc = 0;
        for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
        y.set(r, std::popcount(acc) & 1);
    }
    return y;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
    if (other.rows() != cols_) throw InvalidArgument("matrix-matrix dimension mismatch");
    BitMatrix out(rows(), other.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k : rows_[r].support()) out.rows_[r] ^= other.rows_[k];
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c : rows_[r].support()) out.rows_[c].set(r);
    return out;
}

bool BitMatrix::is_zero() const noexcept {
    for (const auto& r : rows_)
        if (!r.none()) return false;
    return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

std::size_t gf2_rank(BitMatrix m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rref(rows, m.cols()).size();
}

std::optional<BitVector> gf2_solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows())
        throw InvalidArgument("right-hand side has " + std::to_string(b.size()) +
                              " entries for a matrix with " + std::to_string(m.rows()) + " rows");
    // augmented rows [m | b]
    const std::size_t n = m.cols();
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector aug(n + 1);
        for (std::size_t c : m.row(r).support()) aug.set(c);
        aug.set(n, b.get(r));
        rows.push_back(std::move(aug));
    }
    const auto pivots = rref(rows, n + 1);
    BitVector x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt;
        x.set(pivots[i], rows[i].get(n));
    }
    return x;
}

std::vector<BitVector> gf2_kernel_basis(const BitMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const auto pivots = rref(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(n);
        v.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(free)) v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace persw::z2
