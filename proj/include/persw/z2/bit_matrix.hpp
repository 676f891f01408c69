#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace persw::z2 {

/// A packed vector over GF(2).
class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}
    BitVector(std::initializer_list<int> bits);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }
    bool operator[](std::size_t i) const { return get(i); }

    bool none() const noexcept;
    std::size_t count() const noexcept;
    /// Index of the lowest set bit, or size() when none.
    std::size_t first_set() const noexcept;
    std::vector<std::size_t> support() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    const std::vector<word_type>& words() const noexcept { return words_; }
    std::vector<word_type>& words() noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

/// A dense GF(2) matrix stored as packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Bounds-checked; throws InvalidArgument outside the matrix.
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    const BitVector& row(std::size_t r) const { return rows_.at(r); }
    BitVector& row(std::size_t r) { return rows_.at(r); }

    BitVector multiply(const BitVector& x) const;
    BitMatrix multiply(const BitMatrix& other) const;
    BitMatrix transpose() const;
    bool is_zero() const noexcept;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Rank over GF(2).
std::size_t gf2_rank(BitMatrix m);

/// A solution x of m·x = b over GF(2), or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws InvalidArgument when b.size() != m.rows().
std::optional<BitVector> gf2_solve(const BitMatrix& m, const BitVector& b);

/// Basis of the null space {x : m·x = 0}, one vector per free column.
std::vector<BitVector> gf2_kernel_basis(const BitMatrix& m);

}  // namespace persw::z2
