#include <doctest.h>

#include <array>
#include <random>

#include "logops/errors.hpp"
#include "logops/gf4.hpp"
#include "logops/pauli.hpp"

using namespace logops;

namespace {

constexpr std::array<Gf4, 4> kAll = {Gf4::zero(), Gf4::one(), Gf4::omega(), Gf4::omega_bar()};

Gf4Matrix random_gf4_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Gf4Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(r, c) = kAll[rng() % 4];
        }
    }
    return m;
}

}  // namespace

TEST_CASE("field axioms: w*W = 1, w*w = W, W*W = w, 1 + w + W = 0") {
    CHECK(Gf4::omega() * Gf4::omega_bar() == Gf4::one());
    CHECK(Gf4::omega() * Gf4::omega() == Gf4::omega_bar());
    CHECK(Gf4::omega_bar() * Gf4::omega_bar() == Gf4::omega());
    CHECK(Gf4::one() + Gf4::omega() + Gf4::omega_bar() == Gf4::zero());
    for (Gf4 e : kAll) {
        CHECK(e + e == Gf4::zero());
        CHECK(e * Gf4::one() == e);
        CHECK(e * Gf4::zero() == Gf4::zero());
        if (!e.is_zero()) CHECK(e * inverse(e) == Gf4::one());
    }
}

TEST_CASE("conj swaps w and W and is an involution") {
    CHECK(conj(Gf4::omega()) == Gf4::omega_bar());
    CHECK(conj(Gf4::omega_bar()) == Gf4::omega());
    CHECK(conj(Gf4::one()) == Gf4::one());
    CHECK(conj(Gf4::zero()) == Gf4::zero());
    for (Gf4 e : kAll) CHECK(conj(conj(e)) == e);
}

TEST_CASE("conj is a field automorphism") {
    for (Gf4 a : kAll) {
        for (Gf4 b : kAll) {
            CHECK(conj(a * b) == conj(a) * conj(b));
            CHECK(conj(a + b) == conj(a) + conj(b));
        }
    }
}

TEST_CASE("trace: 0 and 1 map to 0, w and W map to 1") {
    CHECK(trace(Gf4::zero()) == 0);
    CHECK(trace(Gf4::one()) == 0);
    CHECK(trace(Gf4::omega()) == 1);
    CHECK(trace(Gf4::omega_bar()) == 1);
    // tr(e) = e + e^2 lands in {0,1} as claimed
    for (Gf4 e : kAll) {
        const Gf4 t = e + e * e;
        CHECK((t == Gf4::zero() || t == Gf4::one()));
        CHECK((trace(e) == 1) == (t == Gf4::one()));
    }
}

TEST_CASE("Pauli image: zero row, single w, single 1") {
    Gf4Matrix zero(1, 3);
    CHECK(to_pauli(zero, 0).is_identity());

    Gf4Matrix w(1, 1);
    w.at(0, 0) = Gf4::omega();
    const PauliVector pw = to_pauli(w, 0);
    CHECK(pw.z_bit(0));
    CHECK_FALSE(pw.x_bit(0));

    Gf4Matrix one(1, 1);
    one.at(0, 0) = Gf4::one();
    const PauliVector p1 = to_pauli(one, 0);
    CHECK(p1.z_bit(0));
    CHECK(p1.x_bit(0));
}

TEST_CASE("Pauli image is additive: gamma(u+v) = gamma(u)*gamma(v)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const Gf4Matrix u = random_gf4_matrix(1, n, rng);
        const Gf4Matrix v = random_gf4_matrix(1, n, rng);
        Gf4Matrix sum(1, n);
        for (std::size_t c = 0; c < n; ++c) sum.at(0, c) = u.at(0, c) + v.at(0, c);
        CHECK(to_pauli(sum, 0) == to_pauli(u, 0) * to_pauli(v, 0));
    }
}

TEST_CASE("trace product basics") {
    Gf4Matrix w(1, 1);
    w.at(0, 0) = Gf4::omega();
    Gf4Matrix wb(1, 1);
    wb.at(0, 0) = Gf4::omega_bar();

    // tr(w * conj(W)) = tr(w*w) = tr(W) = 1
    CHECK(trace_product(w, wb) == BinMatrix::from_rows({{1}}));
    // tr(w * conj(w)) = tr(1) = 0
    CHECK(trace_product(w, w) == BinMatrix::from_rows({{0}}));

    std::mt19937_64 rng(32);
    const Gf4Matrix a = random_gf4_matrix(3, 5, rng);
    CHECK(is_zero(trace_product(a, Gf4Matrix(2, 5))));
}

TEST_CASE("trace product transposes under argument swap") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const Gf4Matrix a = random_gf4_matrix(1 + rng() % 4, n, rng);
        const Gf4Matrix b = random_gf4_matrix(1 + rng() % 4, n, rng);
        CHECK(trace_product(a, b) == transpose(trace_product(b, a)));
    }
}

TEST_CASE("trace product rejects mismatched widths") {
    CHECK_THROWS_AS(trace_product(Gf4Matrix(1, 2), Gf4Matrix(1, 3)), ShapeError);
}

// The identity everything downstream leans on: the trace product of GF(4)
// vectors equals the symplectic product of their Pauli images.
TEST_CASE("trace product matches the symplectic product of the Pauli images") {
    for (Gf4 a : kAll) {
        for (Gf4 b : kAll) {
            Gf4Matrix u(1, 1), v(1, 1);
            u.at(0, 0) = a;
            v.at(0, 0) = b;
            CHECK(trace_product(u, v).get(0, 0) ==
                  (symplectic_product(to_pauli(u, 0), to_pauli(v, 0)) == 1));
        }
    }
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const Gf4Matrix u = random_gf4_matrix(1, n, rng);
        const Gf4Matrix v = random_gf4_matrix(1, n, rng);
        CHECK(trace_product(u, v).get(0, 0) ==
              (symplectic_product(to_pauli(u, 0), to_pauli(v, 0)) == 1));
    }
}

TEST_CASE("rank over GF(4)") {
    CHECK(rank_gf4(Gf4Matrix(3, 4)) == 0);

    Gf4Matrix w(1, 1);
    w.at(0, 0) = Gf4::omega();
    CHECK(rank_gf4(w) == 1);

    // [[1,w],[W,1]]: second row is W times the first, so rank 1.
    Gf4Matrix m(2, 2);
    m.at(0, 0) = Gf4::one();
    m.at(0, 1) = Gf4::omega();
    m.at(1, 0) = Gf4::omega_bar();
    m.at(1, 1) = Gf4::one();
    CHECK(rank_gf4(m) == 1);
}

TEST_CASE("gf4 kernel basis spans the right kernel") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = rng() % 5;
        const std::size_t cols = 1 + rng() % 8;
        const Gf4Matrix m = random_gf4_matrix(rows, cols, rng);
        const Gf4Matrix k = kernel_basis_gf4(m);
        CHECK(k.rows() == cols - rank_gf4(m));
        CHECK(rank_gf4(k) == k.rows());
        CHECK(is_zero(mul(m, transpose(k))));
    }
}

TEST_CASE("scalar multiplication distributes over the Pauli image as expected") {
    // w * (w,w) = (W,W) -> XX; W * (w,w) = (1,1) -> YY
    Gf4Matrix h(1, 2);
    h.at(0, 0) = Gf4::omega();
    h.at(0, 1) = Gf4::omega();
    CHECK(to_pauli(scaled(Gf4::omega(), h), 0) == parse_pauli("XX"));
    CHECK(to_pauli(scaled(Gf4::omega_bar(), h), 0) == parse_pauli("YY"));
}

TEST_CASE("character round trip") {
    for (Gf4 e : kAll) {
        CHECK(Gf4::from_char(e.to_char()) == e);
    }
    CHECK_FALSE(Gf4::from_char('x').has_value());
}
