#ifndef LOGOPS_GF2_HPP
#define LOGOPS_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace logops {

// Bit vector over GF(2), packed 64 entries per word, bit i of word w
// holding entry 64*w + i. Unused tail bits are kept zero so whole-word
// operations (XOR, popcount) need no masking.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static BitVec from_bits(const std::vector<int>& bits);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void xor_with(const BitVec& other);

    // Number of ones.
    std::size_t weight() const;

    bool any() const;

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const BitVec&) const = default;

    static std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

private:
    friend int parity_of_and(const BitVec& a, const BitVec& b);

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// popcount(a & b) mod 2. Both vectors must have equal length.
int parity_of_and(const BitVec& a, const BitVec& b);

// Dense matrix over GF(2) with bit-packed rows. Empty shapes
// (0 rows and/or 0 cols) are legal.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_(BitVec::word_count(cols)),
          data_(rows * words_per_row_, 0) {}

    static BinMatrix identity(std::size_t n);
    static BinMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static BinMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        const std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (value) {
            data_[r * words_per_row_ + (c >> 6)] |= mask;
        } else {
            data_[r * words_per_row_ + (c >> 6)] &= ~mask;
        }
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    std::span<std::uint64_t> row_words(std::size_t r) {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    // row r ^= row s
    void xor_rows(std::size_t r, std::size_t s);

    void swap_rows(std::size_t r, std::size_t s);

    bool row_is_zero(std::size_t r) const;

    bool operator==(const BinMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

// a * b over GF(2). Throws ShapeError unless a.cols == b.rows.
BinMatrix mul(const BinMatrix& a, const BinMatrix& b);

BinMatrix transpose(const BinMatrix& m);

// Row rank by Gaussian elimination on an internal copy.
std::size_t rank(const BinMatrix& m);

// Reduced row echelon form with zero rows dropped; canonical per row space.
BinMatrix reduced_row_basis(const BinMatrix& m);

// True iff a and b span the same row space. Throws ShapeError on
// column mismatch.
bool row_space_equal(const BinMatrix& a, const BinMatrix& b);

// Block-diagonal assembly of the given blocks (empty list -> 0x0).
BinMatrix direct_sum(const std::vector<BinMatrix>& blocks);

// Basis of the right kernel {v : m * v^T = 0}, one basis vector per row.
// For a full-row-rank m this has m.cols() - m.rows() rows.
BinMatrix kernel_basis(const BinMatrix& m);

bool is_zero(const BinMatrix& m);

}  // namespace logops

#endif
