#ifndef LOGOPS_PAULI_HPP
#define LOGOPS_PAULI_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logops/gf2.hpp"

namespace logops {

// One Pauli operator on n qubits in binary symplectic form: qubit q carries
// I/X/Z/Y as (z,x) = (0,0)/(0,1)/(1,0)/(1,1). Overall phases are not
// represented; products are componentwise addition mod 2.
class PauliVector {
public:
    PauliVector() = default;
    explicit PauliVector(std::size_t n) : z_(n), x_(n) {}
    PauliVector(BitVec z, BitVec x);

    std::size_t num_qubits() const { return z_.size(); }

    bool z_bit(std::size_t q) const { return z_.get(q); }
    bool x_bit(std::size_t q) const { return x_.get(q); }
    void set_z(std::size_t q, bool v) { z_.set(q, v); }
    void set_x(std::size_t q, bool v) { x_.set(q, v); }

    const BitVec& z() const { return z_; }
    const BitVec& x() const { return x_; }

    bool is_identity() const { return !z_.any() && !x_.any(); }

    // Phase-free product: (z,x) += (h.z,h.x) mod 2.
    PauliVector& operator*=(const PauliVector& h);
    friend PauliVector operator*(PauliVector g, const PauliVector& h) {
        g *= h;
        return g;
    }

    bool operator==(const PauliVector&) const = default;

    std::string to_string() const;

private:
    BitVec z_;
    BitVec x_;
};

// The commutation functional: 0 iff g and h commute, 1 iff they anticommute.
// Computed as (g.z . h.x + g.x . h.z) mod 2. Throws ShapeError on length
// mismatch.
int symplectic_product(const PauliVector& g, const PauliVector& h);

// Parse a string over {I,X,Y,Z}. Throws ParseError naming the 1-based
// position of the first illegal character. "" parses to the n=0 operator.
PauliVector parse_pauli(std::string_view s);

// Ordered list of Pauli generators on a common qubit count. Order is
// significant: the orthogonalization procedure reorders by position.
struct GeneratorSet {
    std::size_t n = 0;
    std::vector<PauliVector> gens;

    GeneratorSet() = default;
    explicit GeneratorSet(std::size_t n) : n(n) {}
    GeneratorSet(std::size_t n, std::vector<PauliVector> gens);

    std::size_t size() const { return gens.size(); }
    bool empty() const { return gens.empty(); }

    // Appends after checking the qubit count.
    void add(PauliVector g);

    bool operator==(const GeneratorSet&) const = default;
};

// m x 2n binary matrix, row i = z_i | x_i.
BinMatrix to_matrix(const GeneratorSet& gs);

// Inverse of to_matrix; m.cols() must be even.
GeneratorSet generator_set_from_matrix(const BinMatrix& m);

BinMatrix z_matrix(const GeneratorSet& gs);
BinMatrix x_matrix(const GeneratorSet& gs);

// The m x m symplectic product matrix M_Z*M_X^T + M_X*M_Z^T; entry (i,j)
// is symplectic_product(g_i, g_j). Symmetric with zero diagonal.
BinMatrix symplectic_product_matrix(const GeneratorSet& gs);

}  // namespace logops

#endif
