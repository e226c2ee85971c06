#ifndef LOGOPS_CODES_HPP
#define LOGOPS_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logops/gf2.hpp"
#include "logops/gf4.hpp"
#include "logops/pauli.hpp"
#include "logops/sgsop.hpp"

namespace logops {

// Two classical binary codes: generator matrices g1 (k1 x n) and g2
// (k2 x n) with full row rank, parity checks h1 ((n-k1) x n) and h2
// ((n-k2) x n) with h1*g1^T = 0 and h2*g2^T = 0. Build through
// make_css_code, which derives missing checks and validates.
struct CssCodePair {
    std::size_t n = 0;
    BinMatrix g1, g2;
    BinMatrix h1, h2;

    std::size_t k1() const { return g1.rows(); }
    std::size_t k2() const { return g2.rows(); }
};

CssCodePair make_css_code(BinMatrix g1, BinMatrix g2,
                          std::optional<BinMatrix> h1 = std::nullopt,
                          std::optional<BinMatrix> h2 = std::nullopt);

// Classical GF(4) code: generator g (k x n) with full GF(4) row rank and
// parity check h ((n-k) x n) with h*g^T = 0 under the plain product.
// Build through make_gf4_code.
struct Gf4Code {
    std::size_t n = 0;
    Gf4Matrix g;
    Gf4Matrix h;

    std::size_t dim() const { return g.rows(); }
};

Gf4Code make_gf4_code(Gf4Matrix g, std::optional<Gf4Matrix> h = std::nullopt);

struct FormulaCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool agree = false;

    bool operator==(const FormulaCheck&) const = default;
};

// Analysis result. `c` is the ebit count (symplectic pairs among the check
// generators), `i` the isotropic generator count of the check split, `l`
// the logical pair count of the normalizer split, `m` and `p` the
// respective generating-set sizes. `l` and `p` are absent when no
// normalizer was analyzed. Failed formula checks are reported in `checks`,
// never silently dropped, and never abort the analysis.
struct CodeReport {
    std::string kind;  // "stabilizer", "css" or "crss"
    bool entanglement_assisted = false;
    std::size_t n = 0;
    long long k = 0;
    std::size_t c = 0;
    std::size_t i = 0;
    std::size_t m = 0;
    std::optional<std::size_t> l;
    std::optional<std::size_t> p;
    std::vector<std::pair<PauliVector, PauliVector>> logical_pairs;
    std::vector<PauliVector> isotropic_gens;
    std::vector<FormulaCheck> checks;

    bool all_checks_pass() const;
};

// Quantum check generators [[H1|0],[0|H2]]: h1 rows as Z-type operators,
// then h2 rows as X-type.
GeneratorSet css_check_matrix(const CssCodePair& code);

// Normalizer generators [[0|G1],[G2|0]]: g1 rows as X-type operators, then
// g2 rows as Z-type. Throws ValidationError if g1 or g2 is rank deficient.
GeneratorSet css_normalizer(const CssCodePair& code);

// Full analysis: orthogonalize the check generators (ebits) and the
// normalizer generators (logical pairs), evaluate the rank formulas and
// count identities.
CodeReport analyze_css(const CssCodePair& code);

// Ebits via the generator-matrix route: rank(g1*g2^T) - (k1+k2-n).
// Throws ValidationError if the result is negative.
std::size_t css_ebits_from_generators(const CssCodePair& code);

// Ebits via the check-matrix route: rank(h1*h2^T).
std::size_t css_ebits_from_checks(const CssCodePair& code);

// Quantum check generators: Pauli images of the rows of w*H, then W*H.
GeneratorSet crss_check_matrix(const Gf4Code& code);

// Normalizer generators: Pauli images of the rows of w*conj(G), then
// W*conj(G). Every output commutes with every check generator when
// H*G^T = 0.
GeneratorSet crss_normalizer(const Gf4Code& code);

CodeReport analyze_crss(const Gf4Code& code);

// Ebits via rank(G*G^dagger) - (2k-n). Throws ValidationError if negative.
std::size_t crss_ebits_from_generators(const Gf4Code& code);

// Ebits via rank(H*H^dagger).
std::size_t crss_ebits_from_checks(const Gf4Code& code);

// Analysis of a raw generator set, abelian or not; abelian-ness is
// detected, not assumed. With a normalizer generating set, also extracts
// the logical pairs and cross-checks that its isotropic part spans the
// same group as the input's isotropic part. Throws ValidationError if a
// normalizer element anticommutes with an isotropic generator.
CodeReport analyze_stabilizer(const GeneratorSet& gens,
                              const std::optional<GeneratorSet>& normalizer = std::nullopt);

}  // namespace logops

#endif
