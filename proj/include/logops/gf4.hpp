#ifndef LOGOPS_GF4_HPP
#define LOGOPS_GF4_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logops/gf2.hpp"
#include "logops/pauli.hpp"

namespace logops {

// GF(4) = {0, 1, w, W} with W = conj(w) = w^2, w*W = 1, w*w = W, W*W = w,
// and 1 + w + W = 0. An element is stored as two bits (z,x), the
// coefficients of the {w, W} basis over GF(2):
//   0 = (0,0), W = (0,1), w = (1,0), 1 = w + W = (1,1).
// These bits are exactly the (z,x) pair of the element's Pauli image, so
// converting a GF(4) row to a Pauli operator is a bit copy.
class Gf4 {
public:
    constexpr Gf4() = default;

    static constexpr Gf4 zero() { return Gf4(0); }
    static constexpr Gf4 one() { return Gf4(3); }
    static constexpr Gf4 omega() { return Gf4(2); }
    static constexpr Gf4 omega_bar() { return Gf4(1); }

    static constexpr Gf4 from_zx(int z, int x) { return Gf4(std::uint8_t((z << 1) | x)); }

    constexpr int z_bit() const { return v_ >> 1; }
    constexpr int x_bit() const { return v_ & 1; }

    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(std::uint8_t(a.v_ ^ b.v_)); }
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(kMul[a.v_][b.v_]); }
    Gf4& operator+=(Gf4 b) { v_ ^= b.v_; return *this; }
    Gf4& operator*=(Gf4 b) { v_ = kMul[v_][b.v_]; return *this; }

    constexpr bool operator==(const Gf4&) const = default;

    char to_char() const { return "0Ww1"[v_]; }
    static std::optional<Gf4> from_char(char c);

private:
    explicit constexpr Gf4(std::uint8_t v) : v_(v) {}

    static constexpr std::uint8_t kMul[4][4] = {
        {0, 0, 0, 0},
        {0, 2, 3, 1},  // W*W = w, W*w = 1, W*1 = W
        {0, 3, 1, 2},  // w*W = 1, w*w = W, w*1 = w
        {0, 1, 2, 3},
    };

    std::uint8_t v_ = 0;
};

// Frobenius conjugate x -> x^2: fixes 0 and 1, swaps w and W.
constexpr Gf4 conj(Gf4 e) { return Gf4::from_zx(e.x_bit(), e.z_bit()); }

// Field trace tr(e) = e + e^2 into GF(2): 0 and 1 -> 0, w and W -> 1.
constexpr int trace(Gf4 e) { return e.z_bit() ^ e.x_bit(); }

// Multiplicative inverse (equals conj for every nonzero element).
constexpr Gf4 inverse(Gf4 e) { return conj(e); }

// Dense row-major GF(4) matrix; empty shapes are legal.
class Gf4Matrix {
public:
    Gf4Matrix() = default;
    Gf4Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Gf4Matrix from_string_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Gf4 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Gf4& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t r, std::size_t s);
    // row r += e * row s
    void add_scaled_row(std::size_t r, std::size_t s, Gf4 e);
    void scale_row(std::size_t r, Gf4 e);
    bool row_is_zero(std::size_t r) const;

    std::string row_string(std::size_t r) const;

    bool operator==(const Gf4Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Gf4> data_;
};

// a * b over GF(4). Throws ShapeError unless a.cols == b.rows.
Gf4Matrix mul(const Gf4Matrix& a, const Gf4Matrix& b);

// Entrywise conjugation.
Gf4Matrix conjugated(const Gf4Matrix& m);

Gf4Matrix transpose(const Gf4Matrix& m);

// a * conj(b)^T: entry (i,j) = sum_t a(i,t) * conj(b(j,t)). Throws
// ShapeError unless a.cols == b.cols.
Gf4Matrix conj_transpose_product(const Gf4Matrix& a, const Gf4Matrix& b);

// e * m entrywise.
Gf4Matrix scaled(Gf4 e, const Gf4Matrix& m);

// Trace product matrix: entry (i,j) = sum_t tr(a(i,t) * conj(b(j,t))) mod 2,
// shape a.rows x b.rows. This is the elementwise-trace form, not the trace
// of a matrix product. Throws ShapeError on column mismatch.
BinMatrix trace_product(const Gf4Matrix& a, const Gf4Matrix& b);

// Rank over GF(4) by Gaussian elimination on an internal copy.
std::size_t rank_gf4(const Gf4Matrix& m);

// Basis of the right kernel {v : m * v^T = 0} under the plain (untraced,
// unconjugated) product, one basis vector per row.
Gf4Matrix kernel_basis_gf4(const Gf4Matrix& m);

bool is_zero(const Gf4Matrix& m);

// Pauli image of row r: the (z,x) bits of each entry become the operator's
// z and x bits on that qubit.
PauliVector to_pauli(const Gf4Matrix& m, std::size_t r);

// Pauli image of every row, as a generator set on m.cols() qubits.
GeneratorSet to_generators(const Gf4Matrix& m);

}  // namespace logops

#endif
