#include <doctest.h>

#include <random>

#include "logops/codes.hpp"
#include "logops/errors.hpp"
#include "logops/oracle.hpp"

using namespace logops;

namespace {

// [7,4] Hamming code, check columns enumerating 1..7 in binary.
const BinMatrix kHammingH = BinMatrix::from_rows({{1, 0, 1, 0, 1, 0, 1},
                                                  {0, 1, 1, 0, 0, 1, 1},
                                                  {0, 0, 0, 1, 1, 1, 1}});
const BinMatrix kHammingG = BinMatrix::from_rows({{1, 1, 1, 0, 0, 0, 0},
                                                  {1, 0, 0, 1, 1, 0, 0},
                                                  {0, 1, 0, 1, 0, 1, 0},
                                                  {1, 1, 0, 1, 0, 0, 1}});

CssCodePair steane_code() {
    return make_css_code(kHammingG, kHammingG, kHammingH, kHammingH);
}

GeneratorSet five_qubit_stabilizer() {
    GeneratorSet gs(5);
    gs.add(parse_pauli("XZZXI"));
    gs.add(parse_pauli("IXZZX"));
    gs.add(parse_pauli("XIXZZ"));
    gs.add(parse_pauli("ZXIXZ"));
    return gs;
}

// GF(4) presentation of the five-qubit code: H rows are W * (the GF(4)
// images of the first two cyclic stabilizer generators).
Gf4Code five_qubit_gf4_code() {
    const Gf4Matrix h = Gf4Matrix::from_string_rows({"w11w0", "0w11w"});
    return make_gf4_code(kernel_basis_gf4(h), h);
}

bool all_commute(const GeneratorSet& a, const GeneratorSet& b) {
    for (const PauliVector& g : a.gens) {
        for (const PauliVector& h : b.gens) {
            if (symplectic_product(g, h) != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("css check matrix: Steane yields six commuting generators") {
    const GeneratorSet checks = css_check_matrix(steane_code());
    REQUIRE(checks.size() == 6);
    CHECK(is_zero(symplectic_product_matrix(checks)));
    // Z-type rows first, X-type rows after
    CHECK(checks.gens[0] == parse_pauli("ZIZIZIZ"));
    CHECK(checks.gens[3] == parse_pauli("XIXIXIX"));
}

TEST_CASE("css check matrix: repetition-dual pair commutes, shifted pair does not") {
    // G1 = G2 = [[1,1]] derives H1 = H2 = [[1,1]]: {ZZ, XX} commute.
    const CssCodePair commuting = make_css_code(BinMatrix::from_rows({{1, 1}}),
                                                BinMatrix::from_rows({{1, 1}}));
    const GeneratorSet cg = css_check_matrix(commuting);
    REQUIRE(cg.size() == 2);
    CHECK(cg.gens[0] == parse_pauli("ZZ"));
    CHECK(cg.gens[1] == parse_pauli("XX"));
    CHECK(symplectic_product(cg.gens[0], cg.gens[1]) == 0);

    // G1 = G2 = [[0,1]] derives H1 = H2 = [[1,0]]: {ZI, XI} anticommute.
    const CssCodePair ebit = make_css_code(BinMatrix::from_rows({{0, 1}}),
                                           BinMatrix::from_rows({{0, 1}}));
    const GeneratorSet eg = css_check_matrix(ebit);
    REQUIRE(eg.size() == 2);
    CHECK(eg.gens[0] == parse_pauli("ZI"));
    CHECK(eg.gens[1] == parse_pauli("XI"));
    CHECK(symplectic_product(eg.gens[0], eg.gens[1]) == 1);
}

TEST_CASE("css normalizer: sizes and the n=1 free qubit") {
    CHECK(css_normalizer(steane_code()).size() == 8);

    const CssCodePair free_qubit = make_css_code(BinMatrix::from_rows({{1}}),
                                                 BinMatrix::from_rows({{1}}));
    const GeneratorSet norm = css_normalizer(free_qubit);
    REQUIRE(norm.size() == 2);
    CHECK(norm.gens[0] == parse_pauli("X"));
    CHECK(norm.gens[1] == parse_pauli("Z"));
}

TEST_CASE("css normalizer generators commute with the check generators") {
    SUBCASE("Steane") {
        const CssCodePair code = steane_code();
        CHECK(all_commute(css_normalizer(code), css_check_matrix(code)));
    }
    SUBCASE("random codes, entanglement assisted or not") {
        std::mt19937_64 rng(51);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng() % 10;
            const CssCodePair code =
                oracle::random_css_code(n, rng() % (n + 1), rng() % (n + 1), rng);
            CHECK(all_commute(css_normalizer(code), css_check_matrix(code)));
        }
    }
}

TEST_CASE("dual-containing css pairs give fully commuting check generators") {
    // Sample H2 inside the code generated by the kernel of H1, so
    // H1*H2^T = 0 by construction.
    std::mt19937_64 rng(59);
    int built = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const std::size_t k1 = 1 + rng() % n;
        BinMatrix g1(0, 0);
        {
            BinMatrix candidate(k1, n);
            do {
                for (std::size_t r = 0; r < k1; ++r) {
                    for (std::size_t c = 0; c < n; ++c) candidate.set(r, c, rng() & 1);
                }
            } while (rank(candidate) != k1);
            g1 = candidate;
        }
        const BinMatrix h1 = kernel_basis(g1);
        const BinMatrix c1 = kernel_basis(h1);  // basis of the code C1

        // Random combinations of C1's basis rows, kept at full rank.
        const std::size_t rows2 = 1 + rng() % c1.rows();
        BinMatrix h2(rows2, n);
        for (int attempt = 0; attempt < 50; ++attempt) {
            for (std::size_t r = 0; r < rows2; ++r) {
                for (std::size_t w = 0; w < h2.row_words(r).size(); ++w) h2.row_words(r)[w] = 0;
                for (std::size_t s = 0; s < c1.rows(); ++s) {
                    if (rng() & 1) {
                        for (std::size_t w = 0; w < h2.row_words(r).size(); ++w) {
                            h2.row_words(r)[w] ^= c1.row_words(s)[w];
                        }
                    }
                }
            }
            if (rank(h2) == rows2) break;
        }
        if (rank(h2) != rows2) continue;

        CssCodePair code;
        code.n = n;
        code.g1 = g1;
        code.h1 = h1;
        code.g2 = kernel_basis(h2);
        code.h2 = h2;
        REQUIRE(is_zero(mul(code.h1, transpose(code.h2))));
        ++built;
        CHECK(is_zero(symplectic_product_matrix(css_check_matrix(code))));
        CHECK(css_ebits_from_checks(code) == 0);
        const CodeReport report = analyze_css(code);
        CHECK(report.c == 0);
        CHECK(report.all_checks_pass());
    }
    CHECK(built > 0);
}

TEST_CASE("css normalizer rejects rank-deficient generator matrices") {
    CssCodePair bad;
    bad.n = 2;
    bad.g1 = BinMatrix::from_rows({{1, 0}, {1, 0}});
    bad.g2 = BinMatrix::identity(2);
    CHECK_THROWS_AS(css_normalizer(bad), ValidationError);
}

TEST_CASE("analyze_css: Steane parameters") {
    const CodeReport report = analyze_css(steane_code());
    CHECK(report.kind == "css");
    CHECK_FALSE(report.entanglement_assisted);
    CHECK(report.n == 7);
    CHECK(report.k == 1);
    CHECK(report.c == 0);
    CHECK(report.i == 6);
    CHECK(report.m == 6);
    CHECK(report.l == 1);
    CHECK(report.p == 8);
    REQUIRE(report.logical_pairs.size() == 1);
    CHECK(report.isotropic_gens.size() == 6);
    CHECK(report.all_checks_pass());
    // the logical pair commutes with all six stabilizer generators
    for (const PauliVector& s : report.isotropic_gens) {
        CHECK(symplectic_product(report.logical_pairs[0].first, s) == 0);
        CHECK(symplectic_product(report.logical_pairs[0].second, s) == 0);
    }
    CHECK(symplectic_product(report.logical_pairs[0].first, report.logical_pairs[0].second) ==
          1);
}

TEST_CASE("analyze_css: degenerate and tiny codes") {
    SUBCASE("n=2 repetition duals encode nothing") {
        const CodeReport report = analyze_css(make_css_code(BinMatrix::from_rows({{1, 1}}),
                                                            BinMatrix::from_rows({{1, 1}})));
        CHECK(report.k == 0);
        CHECK(report.c == 0);
        CHECK(report.all_checks_pass());
    }
    SUBCASE("n=1 free qubit") {
        const CodeReport report = analyze_css(make_css_code(BinMatrix::from_rows({{1}}),
                                                            BinMatrix::from_rows({{1}})));
        CHECK(report.k == 1);
        CHECK(report.c == 0);
        CHECK(report.m == 0);
        CHECK(report.l == 1);
        CHECK(report.all_checks_pass());
    }
    SUBCASE("one-ebit example") {
        const CodeReport report = analyze_css(make_css_code(BinMatrix::from_rows({{0, 1}}),
                                                            BinMatrix::from_rows({{0, 1}})));
        CHECK(report.k == 1);
        CHECK(report.c == 1);
        CHECK(report.entanglement_assisted);
        CHECK(report.i == 0);
        CHECK(report.l == 1);
        CHECK(report.all_checks_pass());
    }
}

TEST_CASE("analyze_css: random codes satisfy every formula check") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const CssCodePair code =
            oracle::random_css_code(n, rng() % (n + 1), rng() % (n + 1), rng);
        const CodeReport report = analyze_css(code);
        CHECK(report.all_checks_pass());
        CHECK(report.m == report.i + 2 * report.c);
        CHECK(*report.p == report.i + 2 * *report.l);
    }
}

TEST_CASE("css ebit formulas") {
    CHECK(css_ebits_from_generators(steane_code()) == 0);
    CHECK(css_ebits_from_checks(steane_code()) == 0);

    const CssCodePair ebit = make_css_code(BinMatrix::from_rows({{0, 1}}),
                                           BinMatrix::from_rows({{0, 1}}));
    CHECK(css_ebits_from_generators(ebit) == 1);
    CHECK(css_ebits_from_checks(ebit) == 1);

    // k2 = n leaves H2 empty; the check-side product is empty with rank 0.
    const CssCodePair full = make_css_code(BinMatrix::from_rows({{1, 0}}),
                                           BinMatrix::identity(2));
    CHECK(css_ebits_from_checks(full) == 0);
    CHECK(css_ebits_from_generators(full) ==
          rank(mul(full.g1, transpose(full.g2))) - (1 + 2 - 2));

    // Orthogonal generator spaces with k1 + k2 < n still cost ebits: the
    // derived checks overlap. G1 = [[1,0,0]], G2 = [[0,1,0]] on n=3.
    const CssCodePair ortho = make_css_code(BinMatrix::from_rows({{1, 0, 0}}),
                                            BinMatrix::from_rows({{0, 1, 0}}));
    const CodeReport report = analyze_css(ortho);
    CHECK(css_ebits_from_generators(ortho) == 1);
    CHECK(report.c == 1);
    CHECK(report.k == 0);
    CHECK(report.all_checks_pass());
}

TEST_CASE("negative ebit count from inconsistent inputs is rejected") {
    // Bypasses make_css_code: g1 lies about its rank.
    CssCodePair bad;
    bad.n = 2;
    bad.g1 = BinMatrix::from_rows({{1, 0}, {1, 0}});
    bad.g2 = BinMatrix::identity(2);
    bad.h1 = BinMatrix(0, 2);
    bad.h2 = BinMatrix(0, 2);
    CHECK_THROWS_AS(css_ebits_from_generators(bad), ValidationError);
}

TEST_CASE("make_css_code validates its inputs") {
    CHECK_THROWS_AS(make_css_code(BinMatrix::from_rows({{1, 0}, {1, 0}}),
                                  BinMatrix::identity(2)),
                    ValidationError);
    CHECK_THROWS_AS(make_css_code(BinMatrix::from_rows({{1, 0}}),
                                  BinMatrix::from_rows({{1, 0, 0}})),
                    ShapeError);
    // H1*G1^T != 0
    CHECK_THROWS_AS(make_css_code(BinMatrix::from_rows({{1, 0}}),
                                  BinMatrix::from_rows({{1, 0}}),
                                  BinMatrix::from_rows({{1, 0}}), std::nullopt),
                    ValidationError);
    // wrong H row count
    CHECK_THROWS_AS(make_css_code(BinMatrix::from_rows({{1, 0}}),
                                  BinMatrix::from_rows({{1, 0}}),
                                  BinMatrix::from_rows({{0, 1}, {0, 1}}), std::nullopt),
                    ValidationError);
}

TEST_CASE("crss check matrix: one-row example and trace-orthogonal commutation") {
    Gf4Code code;
    code.n = 2;
    code.h = Gf4Matrix::from_string_rows({"ww"});
    code.g = kernel_basis_gf4(code.h);
    const GeneratorSet checks = crss_check_matrix(code);
    REQUIRE(checks.size() == 2);
    CHECK(checks.gens[0] == parse_pauli("XX"));  // gamma(w * (w,w)) = gamma((W,W))
    CHECK(checks.gens[1] == parse_pauli("YY"));  // gamma(W * (w,w)) = gamma((1,1))

    // Trace orthogonality of the imported additive code: every GF(4)
    // multiple of the H rows must be trace-orthogonal, i.e. H*H^dag = 0.
    std::mt19937_64 rng(53);
    int orthogonal_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const Gf4Code c = oracle::random_gf4_code(n, rng() % (n + 1), rng);
        if (!is_zero(conj_transpose_product(c.h, c.h))) continue;
        ++orthogonal_seen;
        CHECK(is_zero(trace_product(c.h, c.h)));
        CHECK(is_zero(symplectic_product_matrix(crss_check_matrix(c))));
    }
    CHECK(orthogonal_seen > 0);
}

TEST_CASE("crss normalizer: n=1 free qubit is a symplectic pair") {
    const Gf4Code code = make_gf4_code(Gf4Matrix::from_string_rows({"1"}));
    const GeneratorSet norm = crss_normalizer(code);
    REQUIRE(norm.size() == 2);
    CHECK(symplectic_product(norm.gens[0], norm.gens[1]) == 1);

    CHECK(crss_normalizer(make_gf4_code(Gf4Matrix(0, 3))).empty());
}

TEST_CASE("crss normalizer generators commute with check generators") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const Gf4Code code = oracle::random_gf4_code(n, rng() % (n + 1), rng);
        CHECK(all_commute(crss_normalizer(code), crss_check_matrix(code)));
    }
}

TEST_CASE("analyze_crss: the five-qubit code") {
    const Gf4Code code = five_qubit_gf4_code();
    CHECK(code.dim() == 3);

    // The GF(4) presentation generates exactly the standard stabilizer.
    CHECK(row_space_equal(to_matrix(crss_check_matrix(code)),
                          to_matrix(five_qubit_stabilizer())));

    const CodeReport report = analyze_crss(code);
    CHECK(report.kind == "crss");
    CHECK(report.n == 5);
    CHECK(report.k == 1);
    CHECK(report.c == 0);
    CHECK(report.i == 4);
    CHECK(report.m == 4);
    CHECK(report.l == 1);
    CHECK(report.p == 6);
    CHECK(report.all_checks_pass());
}

TEST_CASE("analyze_crss: tiny codes and random corpora") {
    SUBCASE("n=1 free qubit") {
        const CodeReport report = analyze_crss(make_gf4_code(Gf4Matrix::from_string_rows({"1"})));
        CHECK(report.k == 1);
        CHECK(report.c == 0);
        CHECK(report.all_checks_pass());
    }
    SUBCASE("random codes satisfy every formula check") {
        std::mt19937_64 rng(55);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng() % 9;
            const Gf4Code code = oracle::random_gf4_code(n, rng() % (n + 1), rng);
            const CodeReport report = analyze_crss(code);
            CHECK(report.all_checks_pass());
        }
    }
    SUBCASE("trace-orthogonal codes need no ebits") {
        std::mt19937_64 rng(56);
        int seen = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 1 + rng() % 8;
            const Gf4Code code = oracle::random_gf4_code(n, rng() % (n + 1), rng);
            if (!is_zero(conj_transpose_product(code.h, code.h))) continue;
            ++seen;
            const CodeReport report = analyze_crss(code);
            CHECK(report.c == 0);
            CHECK(static_cast<long long>(*report.l) ==
                  2 * static_cast<long long>(code.dim()) - static_cast<long long>(code.n));
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("crss ebit formulas") {
    const Gf4Code w_code = make_gf4_code(Gf4Matrix::from_string_rows({"w"}));
    CHECK(crss_ebits_from_generators(w_code) == 0);

    // n=1, k=0 code whose single check row is w: rank(H*H^dag) = 1.
    const Gf4Code h_only = make_gf4_code(Gf4Matrix(0, 1), Gf4Matrix::from_string_rows({"w"}));
    CHECK(crss_ebits_from_checks(h_only) == 1);

    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const Gf4Code code = oracle::random_gf4_code(n, rng() % (n + 1), rng);
        CHECK(crss_ebits_from_generators(code) == crss_ebits_from_checks(code));
    }
}

TEST_CASE("analyze_stabilizer: abelian, entangled, and normalizer-assisted") {
    SUBCASE("abelian input") {
        GeneratorSet gs(3);
        gs.add(parse_pauli("ZZI"));
        gs.add(parse_pauli("IZZ"));
        const CodeReport report = analyze_stabilizer(gs);
        CHECK(report.kind == "stabilizer");
        CHECK_FALSE(report.entanglement_assisted);
        CHECK(report.c == 0);
        CHECK(report.i == 2);
        CHECK(report.k == 1);
        CHECK(report.all_checks_pass());
    }
    SUBCASE("one anticommuting pair, no isotropic part") {
        GeneratorSet gs(1);
        gs.add(parse_pauli("X"));
        gs.add(parse_pauli("Z"));
        const CodeReport report = analyze_stabilizer(gs);
        CHECK(report.entanglement_assisted);
        CHECK(report.c == 1);
        CHECK(report.i == 0);
        CHECK(report.k == 0);
        CHECK(report.all_checks_pass());
    }
    SUBCASE("five-qubit code with its six-element normalizer") {
        GeneratorSet norm = five_qubit_stabilizer();
        norm.add(parse_pauli("XXXXX"));
        norm.add(parse_pauli("ZZZZZ"));
        const CodeReport report = analyze_stabilizer(five_qubit_stabilizer(), norm);
        CHECK(report.k == 1);
        CHECK(report.l == 1);
        CHECK(report.i == 4);
        CHECK(report.p == 6);
        CHECK(report.all_checks_pass());
        REQUIRE(report.logical_pairs.size() == 1);
    }
    SUBCASE("normalizer anticommuting with the isotropic part is rejected") {
        GeneratorSet bad(5);
        bad.add(parse_pauli("ZIIII"));
        CHECK_THROWS_AS(analyze_stabilizer(five_qubit_stabilizer(), bad), ValidationError);
    }
    SUBCASE("random independent sets with centralizer normalizers") {
        std::mt19937_64 rng(58);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + rng() % 8;
            const auto [gens, norm] =
                oracle::random_stabilizer_with_normalizer(n, 1 + rng() % (2 * n), rng);
            const CodeReport report = analyze_stabilizer(gens, norm);
            CHECK(report.all_checks_pass());
        }
    }
}
