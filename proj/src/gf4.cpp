#include "logops/gf4.hpp"

#include "logops/errors.hpp"

namespace logops {

std::optional<Gf4> Gf4::from_char(char c) {
    switch (c) {
        case '0': return Gf4::zero();
        case '1': return Gf4::one();
        case 'w': return Gf4::omega();
        case 'W': return Gf4::omega_bar();
        default: return std::nullopt;
    }
}

Gf4Matrix Gf4Matrix::from_string_rows(const std::vector<std::string>& rows) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows ? rows[0].size() : 0;
    Gf4Matrix m(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
        if (rows[r].size() != ncols) {
            throw ShapeError("ragged GF(4) row list: row " + std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(ncols));
        }
        for (std::size_t c = 0; c < ncols; ++c) {
            const std::optional<Gf4> e = Gf4::from_char(rows[r][c]);
            if (!e) {
                throw ParseError(std::string("illegal GF(4) character '") + rows[r][c] + "'",
                                 r + 1, c + 1);
            }
            m.at(r, c) = *e;
        }
    }
    return m;
}

void Gf4Matrix::swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r, c), at(s, c));
}

void Gf4Matrix::add_scaled_row(std::size_t r, std::size_t s, Gf4 e) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) += e * at(s, c);
}

void Gf4Matrix::scale_row(std::size_t r, Gf4 e) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) *= e;
}

bool Gf4Matrix::row_is_zero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!at(r, c).is_zero()) return false;
    }
    return true;
}

std::string Gf4Matrix::row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c) s[c] = at(r, c).to_char();
    return s;
}

Gf4Matrix mul(const Gf4Matrix& a, const Gf4Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("gf4 mul: inner dimensions disagree (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
    }
    Gf4Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Gf4 e = a.at(i, t);
            if (e.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) += e * b.at(t, j);
            }
        }
    }
    return out;
}

Gf4Matrix conjugated(const Gf4Matrix& m) {
    Gf4Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = conj(m.at(r, c));
    }
    return out;
}

Gf4Matrix transpose(const Gf4Matrix& m) {
    Gf4Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(c, r) = m.at(r, c);
    }
    return out;
}

Gf4Matrix conj_transpose_product(const Gf4Matrix& a, const Gf4Matrix& b) {
    if (a.cols() != b.cols()) {
        throw ShapeError("conj_transpose_product: column counts differ (" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.cols()) + ")");
    }
    Gf4Matrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            Gf4 acc;
            for (std::size_t t = 0; t < a.cols(); ++t) {
                acc += a.at(i, t) * conj(b.at(j, t));
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

Gf4Matrix scaled(Gf4 e, const Gf4Matrix& m) {
    Gf4Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = e * m.at(r, c);
    }
    return out;
}

BinMatrix trace_product(const Gf4Matrix& a, const Gf4Matrix& b) {
    if (a.cols() != b.cols()) {
        throw ShapeError("trace_product: column counts differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.cols()) + ")");
    }
    BinMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            int acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) {
                acc ^= trace(a.at(i, t) * conj(b.at(j, t)));
            }
            if (acc) out.set(i, j, true);
        }
    }
    return out;
}

namespace {

std::size_t eliminate_gf4(Gf4Matrix& m, std::vector<std::size_t>* pivot_cols) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m.at(r, c).is_zero()) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(pivot_row, r);
        m.scale_row(pivot_row, inverse(m.at(pivot_row, c)));
        for (std::size_t r2 = 0; r2 < m.rows(); ++r2) {
            if (r2 == pivot_row) continue;
            const Gf4 e = m.at(r2, c);
            if (!e.is_zero()) m.add_scaled_row(r2, pivot_row, e);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::size_t rank_gf4(const Gf4Matrix& m) {
    Gf4Matrix copy = m;
    return eliminate_gf4(copy, nullptr);
}

Gf4Matrix kernel_basis_gf4(const Gf4Matrix& m) {
    Gf4Matrix reduced = m;
    std::vector<std::size_t> pivot_cols;
    eliminate_gf4(reduced, &pivot_cols);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }

    // Free column set to 1; pivot columns get -reduced(p, fc), and negation
    // is the identity in characteristic 2.
    Gf4Matrix out(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        out.at(i, fc) = Gf4::one();
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
            out.at(i, pivot_cols[p]) = reduced.at(p, fc);
        }
    }
    return out;
}

bool is_zero(const Gf4Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.row_is_zero(r)) return false;
    }
    return true;
}

PauliVector to_pauli(const Gf4Matrix& m, std::size_t r) {
    PauliVector p(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Gf4 e = m.at(r, c);
        if (e.z_bit()) p.set_z(c, true);
        if (e.x_bit()) p.set_x(c, true);
    }
    return p;
}

GeneratorSet to_generators(const Gf4Matrix& m) {
    GeneratorSet gs(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) gs.gens.push_back(to_pauli(m, r));
    return gs;
}

}  // namespace logops
