#include "logops/pauli.hpp"

#include "logops/errors.hpp"

namespace logops {

PauliVector::PauliVector(BitVec z, BitVec x) : z_(std::move(z)), x_(std::move(x)) {
    if (z_.size() != x_.size()) {
        throw ShapeError("PauliVector: z length " + std::to_string(z_.size()) +
                         " != x length " + std::to_string(x_.size()));
    }
}

PauliVector& PauliVector::operator*=(const PauliVector& h) {
    if (num_qubits() != h.num_qubits()) {
        throw ShapeError("Pauli product: qubit counts differ (" +
                         std::to_string(num_qubits()) + " vs " +
                         std::to_string(h.num_qubits()) + ")");
    }
    z_.xor_with(h.z_);
    x_.xor_with(h.x_);
    return *this;
}

std::string PauliVector::to_string() const {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    std::string s(num_qubits(), 'I');
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        s[q] = letters[(z_.get(q) << 1) | int(x_.get(q))];
    }
    return s;
}

int symplectic_product(const PauliVector& g, const PauliVector& h) {
    if (g.num_qubits() != h.num_qubits()) {
        throw ShapeError("symplectic_product: qubit counts differ (" +
                         std::to_string(g.num_qubits()) + " vs " +
                         std::to_string(h.num_qubits()) + ")");
    }
    return parity_of_and(g.z(), h.x()) ^ parity_of_and(g.x(), h.z());
}

PauliVector parse_pauli(std::string_view s) {
    PauliVector p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'I':
                break;
            case 'X':
                p.set_x(i, true);
                break;
            case 'Z':
                p.set_z(i, true);
                break;
            case 'Y':
                p.set_z(i, true);
                p.set_x(i, true);
                break;
            default:
                throw ParseError(std::string("illegal Pauli character '") + s[i] + "'", 0,
                                 i + 1);
        }
    }
    return p;
}

GeneratorSet::GeneratorSet(std::size_t n, std::vector<PauliVector> gens)
    : n(n), gens(std::move(gens)) {
    for (const PauliVector& g : this->gens) {
        if (g.num_qubits() != n) {
            throw ShapeError("GeneratorSet: generator on " + std::to_string(g.num_qubits()) +
                             " qubits in a set on " + std::to_string(n));
        }
    }
}

void GeneratorSet::add(PauliVector g) {
    if (g.num_qubits() != n) {
        throw ShapeError("GeneratorSet::add: generator on " + std::to_string(g.num_qubits()) +
                         " qubits in a set on " + std::to_string(n));
    }
    gens.push_back(std::move(g));
}

BinMatrix to_matrix(const GeneratorSet& gs) {
    BinMatrix m(gs.size(), 2 * gs.n);
    for (std::size_t r = 0; r < gs.size(); ++r) {
        const PauliVector& g = gs.gens[r];
        for (std::size_t q = 0; q < gs.n; ++q) {
            if (g.z_bit(q)) m.set(r, q, true);
            if (g.x_bit(q)) m.set(r, gs.n + q, true);
        }
    }
    return m;
}

GeneratorSet generator_set_from_matrix(const BinMatrix& m) {
    if (m.cols() % 2 != 0) {
        throw ShapeError("generator_set_from_matrix: odd column count " +
                         std::to_string(m.cols()));
    }
    const std::size_t n = m.cols() / 2;
    GeneratorSet gs(n);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        PauliVector g(n);
        for (std::size_t q = 0; q < n; ++q) {
            if (m.get(r, q)) g.set_z(q, true);
            if (m.get(r, n + q)) g.set_x(q, true);
        }
        gs.gens.push_back(std::move(g));
    }
    return gs;
}

namespace {

BinMatrix half_matrix(const GeneratorSet& gs, bool x_half) {
    BinMatrix m(gs.size(), gs.n);
    for (std::size_t r = 0; r < gs.size(); ++r) {
        const BitVec& v = x_half ? gs.gens[r].x() : gs.gens[r].z();
        std::span<const std::uint64_t> src = v.words();
        std::span<std::uint64_t> dst = m.row_words(r);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
    }
    return m;
}

}  // namespace

BinMatrix z_matrix(const GeneratorSet& gs) { return half_matrix(gs, false); }

BinMatrix x_matrix(const GeneratorSet& gs) { return half_matrix(gs, true); }

BinMatrix symplectic_product_matrix(const GeneratorSet& gs) {
    const BinMatrix mz = z_matrix(gs);
    const BinMatrix mx = x_matrix(gs);
    BinMatrix omega = mul(mz, transpose(mx));
    const BinMatrix xz = mul(mx, transpose(mz));
    for (std::size_t r = 0; r < omega.rows(); ++r) {
        std::span<std::uint64_t> dst = omega.row_words(r);
        std::span<const std::uint64_t> src = xz.row_words(r);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
    return omega;
}

}  // namespace logops
