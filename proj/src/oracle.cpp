#include "logops/oracle.hpp"

#include "logops/errors.hpp"

namespace logops::oracle {

bool VerificationReport::all_pass() const {
    for (const VerificationCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

void VerificationReport::add(std::string name, long long expected, long long actual) {
    checks.push_back({std::move(name), expected, actual, expected == actual});
}

namespace {

std::vector<std::vector<int>> unpack(const BinMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c) ? 1 : 0;
    }
    return rows;
}

// Scalar commutation functional from unpacked bits.
int naive_symplectic_product(const PauliVector& g, const PauliVector& h) {
    int acc = 0;
    for (std::size_t q = 0; q < g.num_qubits(); ++q) {
        acc += int(g.z_bit(q)) * int(h.x_bit(q));
        acc += int(g.x_bit(q)) * int(h.z_bit(q));
    }
    return acc % 2;
}

}  // namespace

std::size_t naive_rank(const BinMatrix& m) {
    std::vector<std::vector<int>> rows = unpack(m);
    const std::size_t ncols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
        std::size_t r = pivot_row;
        while (r < rows.size() && rows[r][c] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[pivot_row], rows[r]);
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == pivot_row || rows[r2][c] == 0) continue;
            for (std::size_t c2 = 0; c2 < ncols; ++c2) {
                rows[r2][c2] = (rows[r2][c2] + rows[pivot_row][c2]) % 2;
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

BinMatrix naive_mul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("naive_mul: inner dimensions disagree");
    }
    BinMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            int acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) {
                acc += int(a.get(i, t)) * int(b.get(t, j));
            }
            if (acc % 2) out.set(i, j, true);
        }
    }
    return out;
}

BinMatrix pairwise_omega(const GeneratorSet& gs) {
    BinMatrix out(gs.size(), gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = 0; j < gs.size(); ++j) {
            if (naive_symplectic_product(gs.gens[i], gs.gens[j])) out.set(i, j, true);
        }
    }
    return out;
}

VerificationReport verify_decomposition(const GeneratorSet& input,
                                        const SymplecticDecomposition& d) {
    VerificationReport report;

    report.add("count identity 2*pairs + isotropic == m",
               static_cast<long long>(input.size()),
               static_cast<long long>(d.input_size()));

    // Commutation structure, entry by entry: within a pair f = 1,
    // everywhere else f = 0.
    const GeneratorSet processed = processed_generators(d);
    long long structure_violations = 0;
    const std::size_t np = d.pairs.size();
    for (std::size_t i = 0; i < processed.size(); ++i) {
        for (std::size_t j = i + 1; j < processed.size(); ++j) {
            const int f = naive_symplectic_product(processed.gens[i], processed.gens[j]);
            const bool same_pair = i < 2 * np && (i / 2 == j / 2);
            const int expected = same_pair ? 1 : 0;
            if (f != expected) ++structure_violations;
        }
    }
    report.add("pairing/commutation structure violations", 0, structure_violations);

    bool preserved = false;
    if (input.size() == d.input_size()) {
        preserved = row_space_equal(to_matrix(input), to_matrix(processed));
    }
    report.add("group preservation (row-space equality)", 1, preserved ? 1 : 0);

    bool replay_ok = false;
    try {
        replay_ok = replay_inverse(d) == input;
    } catch (const std::exception&) {
        replay_ok = false;  // corrupted logs may also surface as shape errors
    }
    report.add("replay_inverse reproduces the input exactly", 1, replay_ok ? 1 : 0);

    report.add("naive rank(omega)/2 == pair count",
               static_cast<long long>(naive_rank(pairwise_omega(input)) / 2),
               static_cast<long long>(d.pairs.size()));
    return report;
}

namespace {

bool random_bit(std::mt19937_64& rng) { return (rng() >> 32) & 1; }

BinMatrix random_bin_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BinMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (random_bit(rng)) m.set(r, c, true);
        }
    }
    return m;
}

constexpr int kMaxRetries = 200;

BinMatrix random_full_rank_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        BinMatrix m = random_bin_matrix(rows, cols, rng);
        if (rank(m) == rows) return m;
    }
    throw ValidationError("could not sample a full-rank " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " binary matrix");
}

}  // namespace

GeneratorSet random_generator_set(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    GeneratorSet gs(n);
    for (std::size_t i = 0; i < m; ++i) {
        PauliVector g(n);
        for (std::size_t q = 0; q < n; ++q) {
            g.set_z(q, random_bit(rng));
            g.set_x(q, random_bit(rng));
        }
        gs.gens.push_back(std::move(g));
    }
    return gs;
}

GeneratorSet random_independent_generator_set(std::size_t n, std::size_t m,
                                              std::mt19937_64& rng) {
    if (m > 2 * n) {
        throw ValidationError("cannot pick " + std::to_string(m) +
                              " independent generators on " + std::to_string(n) + " qubits");
    }
    return generator_set_from_matrix(random_full_rank_matrix(m, 2 * n, rng));
}

CssCodePair random_css_code(std::size_t n, std::size_t k1, std::size_t k2,
                            std::mt19937_64& rng) {
    BinMatrix g1 = random_full_rank_matrix(k1, n, rng);
    BinMatrix g2 = random_full_rank_matrix(k2, n, rng);
    return make_css_code(std::move(g1), std::move(g2));
}

Gf4Code random_gf4_code(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Gf4Matrix g(k, n);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                g.at(r, c) = Gf4::from_zx(random_bit(rng), random_bit(rng));
            }
        }
        if (rank_gf4(g) == k) return make_gf4_code(std::move(g));
    }
    throw ValidationError("could not sample a full-rank " + std::to_string(k) + "x" +
                          std::to_string(n) + " GF(4) matrix");
}

std::pair<GeneratorSet, GeneratorSet> random_stabilizer_with_normalizer(
    std::size_t n, std::size_t m, std::mt19937_64& rng) {
    const GeneratorSet gens = random_independent_generator_set(n, m, rng);

    // The centralizer of the set is the kernel of its binary image with the
    // z and x halves swapped: f(v, g) = v_z.g_x + v_x.g_z.
    BinMatrix swapped(gens.size(), 2 * n);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        const PauliVector& g = gens.gens[r];
        for (std::size_t q = 0; q < n; ++q) {
            if (g.x_bit(q)) swapped.set(r, q, true);
            if (g.z_bit(q)) swapped.set(r, n + q, true);
        }
    }
    return {gens, generator_set_from_matrix(kernel_basis(swapped))};
}

}  // namespace logops::oracle
