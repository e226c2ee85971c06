#include "logops/codes.hpp"

#include <algorithm>

#include "logops/errors.hpp"

namespace logops {

namespace {

void require_full_row_rank(const BinMatrix& m, const std::string& name) {
    if (rank(m) != m.rows()) {
        throw ValidationError(name + " is rank deficient (" + std::to_string(rank(m)) +
                              " independent rows out of " + std::to_string(m.rows()) + ")");
    }
}

void validate_check_matrix(const BinMatrix& h, const BinMatrix& g, std::size_t n,
                           const std::string& hname, const std::string& gname) {
    if (h.cols() != n) {
        throw ShapeError(hname + " has " + std::to_string(h.cols()) + " columns, expected " +
                         std::to_string(n));
    }
    if (h.rows() != n - g.rows()) {
        throw ValidationError(hname + " has " + std::to_string(h.rows()) + " rows, expected " +
                              std::to_string(n - g.rows()));
    }
    require_full_row_rank(h, hname);
    if (!is_zero(mul(h, transpose(g)))) {
        throw ValidationError(hname + "*" + gname + "^T != 0");
    }
}

}  // namespace

CssCodePair make_css_code(BinMatrix g1, BinMatrix g2, std::optional<BinMatrix> h1,
                          std::optional<BinMatrix> h2) {
    // The code length is whatever width any supplied matrix carries; k=0
    // codes have empty generator matrices and get their length from the
    // checks.
    std::size_t n = std::max(g1.cols(), g2.cols());
    if (h1) n = std::max(n, h1->cols());
    if (h2) n = std::max(n, h2->cols());
    if (g1.rows() == 0 && g1.cols() == 0) g1 = BinMatrix(0, n);
    if (g2.rows() == 0 && g2.cols() == 0) g2 = BinMatrix(0, n);
    if (g1.cols() != n || g2.cols() != n) {
        throw ShapeError("generator/check matrices have inconsistent widths (G1: " +
                         std::to_string(g1.cols()) + ", G2: " + std::to_string(g2.cols()) +
                         ", length " + std::to_string(n) + ")");
    }
    if (g1.rows() > n || g2.rows() > n) {
        throw ValidationError("generator matrix has more rows than columns");
    }
    require_full_row_rank(g1, "G1");
    require_full_row_rank(g2, "G2");

    // A 0-row check matrix carries no width information of its own.
    if (h1 && h1->rows() == 0) h1 = BinMatrix(0, n);
    if (h2 && h2->rows() == 0) h2 = BinMatrix(0, n);

    CssCodePair code;
    code.n = n;
    code.h1 = h1 ? std::move(*h1) : kernel_basis(g1);
    code.h2 = h2 ? std::move(*h2) : kernel_basis(g2);
    validate_check_matrix(code.h1, g1, n, "H1", "G1");
    validate_check_matrix(code.h2, g2, n, "H2", "G2");
    code.g1 = std::move(g1);
    code.g2 = std::move(g2);
    return code;
}

Gf4Code make_gf4_code(Gf4Matrix g, std::optional<Gf4Matrix> h) {
    std::size_t n = g.cols();
    if (h) n = std::max(n, h->cols());
    if (g.rows() == 0 && g.cols() == 0 && n > 0) g = Gf4Matrix(0, n);
    if (g.cols() != n) {
        throw ShapeError("G and H widths differ (" + std::to_string(g.cols()) + " vs " +
                         std::to_string(n) + ")");
    }
    if (g.rows() > n) {
        throw ValidationError("generator matrix has more rows than columns");
    }
    if (rank_gf4(g) != g.rows()) {
        throw ValidationError("G is rank deficient over GF(4) (" + std::to_string(rank_gf4(g)) +
                              " independent rows out of " + std::to_string(g.rows()) + ")");
    }

    if (h && h->rows() == 0) h = Gf4Matrix(0, n);

    Gf4Code code;
    code.n = n;
    code.h = h ? std::move(*h) : kernel_basis_gf4(g);
    if (code.h.cols() != n) {
        throw ShapeError("H has " + std::to_string(code.h.cols()) + " columns, expected " +
                         std::to_string(n));
    }
    if (code.h.rows() != n - g.rows()) {
        throw ValidationError("H has " + std::to_string(code.h.rows()) + " rows, expected " +
                              std::to_string(n - g.rows()));
    }
    if (rank_gf4(code.h) != code.h.rows()) {
        throw ValidationError("H is rank deficient over GF(4)");
    }
    if (!is_zero(mul(code.h, transpose(g)))) {
        throw ValidationError("H*G^T != 0");
    }
    code.g = std::move(g);
    return code;
}

bool CodeReport::all_checks_pass() const {
    for (const FormulaCheck& c : checks) {
        if (!c.agree) return false;
    }
    return true;
}

GeneratorSet css_check_matrix(const CssCodePair& code) {
    GeneratorSet gs(code.n);
    for (std::size_t r = 0; r < code.h1.rows(); ++r) {
        PauliVector g(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            if (code.h1.get(r, q)) g.set_z(q, true);
        }
        gs.gens.push_back(std::move(g));
    }
    for (std::size_t r = 0; r < code.h2.rows(); ++r) {
        PauliVector g(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            if (code.h2.get(r, q)) g.set_x(q, true);
        }
        gs.gens.push_back(std::move(g));
    }
    return gs;
}

GeneratorSet css_normalizer(const CssCodePair& code) {
    require_full_row_rank(code.g1, "G1");
    require_full_row_rank(code.g2, "G2");
    GeneratorSet gs(code.n);
    for (std::size_t r = 0; r < code.g1.rows(); ++r) {
        PauliVector g(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            if (code.g1.get(r, q)) g.set_x(q, true);
        }
        gs.gens.push_back(std::move(g));
    }
    for (std::size_t r = 0; r < code.g2.rows(); ++r) {
        PauliVector g(code.n);
        for (std::size_t q = 0; q < code.n; ++q) {
            if (code.g2.get(r, q)) g.set_z(q, true);
        }
        gs.gens.push_back(std::move(g));
    }
    return gs;
}

namespace {

std::size_t commutation_violations(
    const std::vector<std::pair<PauliVector, PauliVector>>& pairs,
    const std::vector<PauliVector>& isotropic) {
    std::size_t bad = 0;
    for (const auto& [a, b] : pairs) {
        for (const PauliVector& g : isotropic) {
            bad += symplectic_product(a, g);
            bad += symplectic_product(b, g);
        }
    }
    return bad;
}

bool isotropic_spans_match(std::size_t n, const std::vector<PauliVector>& a,
                           const std::vector<PauliVector>& b) {
    return row_space_equal(to_matrix(GeneratorSet(n, a)), to_matrix(GeneratorSet(n, b)));
}

void push_check(CodeReport& report, std::string name, long long lhs, long long rhs) {
    report.checks.push_back({std::move(name), lhs, rhs, lhs == rhs});
}

}  // namespace

CodeReport analyze_css(const CssCodePair& code) {
    const GeneratorSet checks = css_check_matrix(code);
    const GeneratorSet normalizer = css_normalizer(code);
    const SymplecticDecomposition dc = sgsop(checks);
    const SymplecticDecomposition dn = sgsop(normalizer);

    const long long k1 = static_cast<long long>(code.k1());
    const long long k2 = static_cast<long long>(code.k2());
    const long long n = static_cast<long long>(code.n);

    CodeReport report;
    report.kind = "css";
    report.n = code.n;
    report.c = dc.pairs.size();
    report.entanglement_assisted = report.c > 0;
    report.i = dc.isotropic.size();
    report.m = checks.size();
    report.l = dn.pairs.size();
    report.p = normalizer.size();
    report.k = k1 + k2 - n + static_cast<long long>(report.c);
    report.logical_pairs = dn.pairs;
    report.isotropic_gens = dc.isotropic;

    push_check(report, "rank(G1*G2^T) == k1+k2-n+c",
               static_cast<long long>(rank(mul(code.g1, transpose(code.g2)))),
               k1 + k2 - n + static_cast<long long>(report.c));
    push_check(report, "rank(H1*H2^T) == c",
               static_cast<long long>(rank(mul(code.h1, transpose(code.h2)))),
               static_cast<long long>(report.c));
    push_check(report, "normalizer pairs == k1+k2-n+c", static_cast<long long>(*report.l),
               k1 + k2 - n + static_cast<long long>(report.c));
    push_check(report, "m == i + 2c", static_cast<long long>(report.m),
               static_cast<long long>(report.i + 2 * report.c));
    push_check(report, "p == i + 2l", static_cast<long long>(*report.p),
               static_cast<long long>(report.i + 2 * *report.l));
    push_check(report, "normalizer isotropic part spans check isotropic part",
               isotropic_spans_match(code.n, dn.isotropic, dc.isotropic) ? 1 : 0, 1);
    push_check(report, "logical/isotropic commutation violations == 0",
               static_cast<long long>(commutation_violations(dn.pairs, dc.isotropic)), 0);
    return report;
}

std::size_t css_ebits_from_generators(const CssCodePair& code) {
    const long long base = static_cast<long long>(code.k1()) +
                           static_cast<long long>(code.k2()) -
                           static_cast<long long>(code.n);
    const long long r = static_cast<long long>(rank(mul(code.g1, transpose(code.g2))));
    const long long c = r - base;
    if (c < 0) {
        throw ValidationError("negative ebit count from rank(G1*G2^T) = " + std::to_string(r) +
                              ", k1+k2-n = " + std::to_string(base) +
                              "; inconsistent code inputs");
    }
    return static_cast<std::size_t>(c);
}

std::size_t css_ebits_from_checks(const CssCodePair& code) {
    return rank(mul(code.h1, transpose(code.h2)));
}

GeneratorSet crss_check_matrix(const Gf4Code& code) {
    GeneratorSet gs(code.n);
    const Gf4Matrix top = scaled(Gf4::omega(), code.h);
    const Gf4Matrix bottom = scaled(Gf4::omega_bar(), code.h);
    for (std::size_t r = 0; r < top.rows(); ++r) gs.gens.push_back(to_pauli(top, r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) gs.gens.push_back(to_pauli(bottom, r));
    return gs;
}

GeneratorSet crss_normalizer(const Gf4Code& code) {
    GeneratorSet gs(code.n);
    const Gf4Matrix gstar = conjugated(code.g);
    const Gf4Matrix top = scaled(Gf4::omega(), gstar);
    const Gf4Matrix bottom = scaled(Gf4::omega_bar(), gstar);
    for (std::size_t r = 0; r < top.rows(); ++r) gs.gens.push_back(to_pauli(top, r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) gs.gens.push_back(to_pauli(bottom, r));
    return gs;
}

CodeReport analyze_crss(const Gf4Code& code) {
    const GeneratorSet checks = crss_check_matrix(code);
    const GeneratorSet normalizer = crss_normalizer(code);
    const SymplecticDecomposition dc = sgsop(checks);
    const SymplecticDecomposition dn = sgsop(normalizer);

    const long long k = static_cast<long long>(code.dim());
    const long long n = static_cast<long long>(code.n);

    CodeReport report;
    report.kind = "crss";
    report.n = code.n;
    report.c = dc.pairs.size();
    report.entanglement_assisted = report.c > 0;
    report.i = dc.isotropic.size();
    report.m = checks.size();
    report.l = dn.pairs.size();
    report.p = normalizer.size();
    report.k = 2 * k - n + static_cast<long long>(report.c);
    report.logical_pairs = dn.pairs;
    report.isotropic_gens = dc.isotropic;

    push_check(report, "rank(G*G^dag) == 2k-n+c",
               static_cast<long long>(rank_gf4(conj_transpose_product(code.g, code.g))),
               2 * k - n + static_cast<long long>(report.c));
    push_check(report, "rank(H*H^dag) == c",
               static_cast<long long>(rank_gf4(conj_transpose_product(code.h, code.h))),
               static_cast<long long>(report.c));
    push_check(report, "normalizer pairs == 2k-n+c", static_cast<long long>(*report.l),
               2 * k - n + static_cast<long long>(report.c));
    push_check(report, "m == i + 2c", static_cast<long long>(report.m),
               static_cast<long long>(report.i + 2 * report.c));
    push_check(report, "p == i + 2l", static_cast<long long>(*report.p),
               static_cast<long long>(report.i + 2 * *report.l));
    push_check(report, "normalizer isotropic part spans check isotropic part",
               isotropic_spans_match(code.n, dn.isotropic, dc.isotropic) ? 1 : 0, 1);
    push_check(report, "logical/isotropic commutation violations == 0",
               static_cast<long long>(commutation_violations(dn.pairs, dc.isotropic)), 0);
    return report;
}

std::size_t crss_ebits_from_generators(const Gf4Code& code) {
    const long long base = 2 * static_cast<long long>(code.dim()) -
                           static_cast<long long>(code.n);
    const long long r =
        static_cast<long long>(rank_gf4(conj_transpose_product(code.g, code.g)));
    const long long c = r - base;
    if (c < 0) {
        throw ValidationError("negative ebit count from rank(G*G^dag) = " + std::to_string(r) +
                              ", 2k-n = " + std::to_string(base) + "; inconsistent code inputs");
    }
    return static_cast<std::size_t>(c);
}

std::size_t crss_ebits_from_checks(const Gf4Code& code) {
    return rank_gf4(conj_transpose_product(code.h, code.h));
}

CodeReport analyze_stabilizer(const GeneratorSet& gens,
                              const std::optional<GeneratorSet>& normalizer) {
    const SymplecticDecomposition dc = sgsop(gens);

    CodeReport report;
    report.kind = "stabilizer";
    report.n = gens.n;
    report.c = dc.pairs.size();
    report.entanglement_assisted = report.c > 0;
    report.i = dc.isotropic.size();
    report.m = gens.size();
    report.isotropic_gens = dc.isotropic;
    report.k = static_cast<long long>(gens.n) - static_cast<long long>(rank(to_matrix(gens))) +
               static_cast<long long>(report.c);

    push_check(report, "m == i + 2c", static_cast<long long>(report.m),
               static_cast<long long>(report.i + 2 * report.c));
    push_check(report, "rank(omega)/2 == c", static_cast<long long>(pair_count(gens)),
               static_cast<long long>(report.c));

    if (normalizer) {
        if (normalizer->n != gens.n) {
            throw ShapeError("normalizer qubit count " + std::to_string(normalizer->n) +
                             " != generator qubit count " + std::to_string(gens.n));
        }
        for (std::size_t j = 0; j < normalizer->size(); ++j) {
            for (std::size_t t = 0; t < dc.isotropic.size(); ++t) {
                if (symplectic_product(normalizer->gens[j], dc.isotropic[t]) == 1) {
                    throw ValidationError("normalizer generator " + std::to_string(j + 1) +
                                          " anticommutes with isotropic generator " +
                                          std::to_string(t + 1));
                }
            }
        }
        const SymplecticDecomposition dn = sgsop(*normalizer);
        report.l = dn.pairs.size();
        report.p = normalizer->size();
        report.logical_pairs = dn.pairs;

        push_check(report, "p == i + 2l", static_cast<long long>(*report.p),
                   static_cast<long long>(report.i + 2 * *report.l));
        push_check(report, "normalizer pairs == k", static_cast<long long>(*report.l),
                   report.k);
        push_check(report, "normalizer isotropic part spans input isotropic part",
                   isotropic_spans_match(gens.n, dn.isotropic, dc.isotropic) ? 1 : 0, 1);
        push_check(report, "logical/isotropic commutation violations == 0",
                   static_cast<long long>(commutation_violations(dn.pairs, dc.isotropic)), 0);
    }
    return report;
}

}  // namespace logops
