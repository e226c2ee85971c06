#include "logops/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "logops/errors.hpp"

namespace logops {

BitVec BitVec::from_bits(const std::vector<int>& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) v.set(i, true);
    }
    return v;
}

void BitVec::xor_with(const BitVec& other) {
    if (size_ != other.size_) {
        throw ShapeError("BitVec xor: length mismatch (" + std::to_string(size_) +
                         " vs " + std::to_string(other.size_) + ")");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
}

std::size_t BitVec::weight() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool BitVec::any() const {
    for (std::uint64_t w : words_) {
        if (w) return true;
    }
    return false;
}

int parity_of_and(const BitVec& a, const BitVec& b) {
    if (a.size_ != b.size_) {
        throw ShapeError("BitVec parity: length mismatch (" + std::to_string(a.size_) +
                         " vs " + std::to_string(b.size_) + ")");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        acc ^= a.words_[w] & b.words_[w];
    }
    return std::popcount(acc) & 1;
}

BinMatrix BinMatrix::identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinMatrix BinMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

BinMatrix BinMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows ? rows[0].size() : 0;
    BinMatrix m(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        if (rows[r].size() != ncols) {
            throw ShapeError("ragged row list: row " + std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(ncols));
        }
        for (std::size_t c = 0; c < ncols; ++c) {
            if (rows[r][c]) m.set(r, c, true);
        }
    }
    return m;
}

void BinMatrix::xor_rows(std::size_t r, std::size_t s) {
    std::uint64_t* dst = data_.data() + r * words_per_row_;
    const std::uint64_t* src = data_.data() + s * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] ^= src[w];
}

void BinMatrix::swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    std::uint64_t* a = data_.data() + r * words_per_row_;
    std::uint64_t* b = data_.data() + s * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w) std::swap(a[w], b[w]);
}

bool BinMatrix::row_is_zero(std::size_t r) const {
    const std::uint64_t* p = data_.data() + r * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
        if (p[w]) return false;
    }
    return true;
}

BinMatrix mul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("mul: inner dimensions disagree (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
    }
    BinMatrix out(a.rows(), b.cols());
    // result row i = XOR of the b rows selected by the set bits of a's row i
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::span<std::uint64_t> acc = out.row_words(i);
        for (std::size_t t = 0; t < a.cols(); ++t) {
            if (!a.get(i, t)) continue;
            std::span<const std::uint64_t> src = b.row_words(t);
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= src[w];
        }
    }
    return out;
}

BinMatrix transpose(const BinMatrix& m) {
    BinMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) out.set(c, r, true);
        }
    }
    return out;
}

namespace {

// Forward elimination in place; returns rank. Used by rank() and
// reduced_row_basis().
std::size_t eliminate(BinMatrix& m, std::vector<std::size_t>* pivot_cols) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !m.get(r, c)) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(pivot_row, r);
        for (std::size_t r2 = 0; r2 < m.rows(); ++r2) {
            if (r2 != pivot_row && m.get(r2, c)) m.xor_rows(r2, pivot_row);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::size_t rank(const BinMatrix& m) {
    BinMatrix copy = m;
    return eliminate(copy, nullptr);
}

BinMatrix reduced_row_basis(const BinMatrix& m) {
    BinMatrix copy = m;
    const std::size_t r = eliminate(copy, nullptr);
    BinMatrix out(r, m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t w = 0; w < out.row_words(i).size(); ++w) {
            out.row_words(i)[w] = copy.row_words(i)[w];
        }
    }
    return out;
}

bool row_space_equal(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.cols()) {
        throw ShapeError("row_space_equal: column counts differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.cols()) + ")");
    }
    // RREF is canonical, so spans agree iff the reduced bases are identical.
    return reduced_row_basis(a) == reduced_row_basis(b);
}

BinMatrix direct_sum(const std::vector<BinMatrix>& blocks) {
    std::size_t total_rows = 0;
    std::size_t total_cols = 0;
    for (const BinMatrix& b : blocks) {
        total_rows += b.rows();
        total_cols += b.cols();
    }
    BinMatrix out(total_rows, total_cols);
    std::size_t row_off = 0;
    std::size_t col_off = 0;
    for (const BinMatrix& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (b.get(r, c)) out.set(row_off + r, col_off + c, true);
            }
        }
        row_off += b.rows();
        col_off += b.cols();
    }
    return out;
}

BinMatrix kernel_basis(const BinMatrix& m) {
    BinMatrix reduced = m;
    std::vector<std::size_t> pivot_cols;
    eliminate(reduced, &pivot_cols);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }

    // One basis vector per free column: that column set to 1, pivot
    // columns set to the corresponding entries of the reduced rows.
    BinMatrix out(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        out.set(i, fc, true);
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
            if (reduced.get(p, fc)) out.set(i, pivot_cols[p], true);
        }
    }
    return out;
}

bool is_zero(const BinMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.row_is_zero(r)) return false;
    }
    return true;
}

}  // namespace logops
