#ifndef LOGOPS_ORACLE_HPP
#define LOGOPS_ORACLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "logops/codes.hpp"
#include "logops/gf2.hpp"
#include "logops/gf4.hpp"
#include "logops/pauli.hpp"
#include "logops/sgsop.hpp"

// Brute-force recomputation of everything the fast path produces. The
// implementations here are deliberately naive (unpacked ints, textbook
// triple loops) and share no code with the bit-packed path they check.

namespace logops::oracle {

struct VerificationCheck {
    std::string name;
    long long expected = 0;
    long long actual = 0;
    bool pass = false;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<VerificationCheck> checks;

    bool all_pass() const;
    void add(std::string name, long long expected, long long actual);
};

// Textbook row-echelon rank on unpacked entries.
std::size_t naive_rank(const BinMatrix& m);

// Triple-loop product on unpacked entries.
BinMatrix naive_mul(const BinMatrix& a, const BinMatrix& b);

// Symplectic product matrix built entry by entry from the scalar
// definition; no matrix multiply involved.
BinMatrix pairwise_omega(const GeneratorSet& gs);

// Full contract check of a decomposition against its input:
//   (a) pairing and cross-commutation structure, entry by entry
//   (b) group preservation (row-space equality of the binary images)
//   (c) 2*pairs + isotropic == input size
//   (d) replay_inverse round-trip
//   (e) naive_rank(pairwise_omega(input))/2 == pair count
// Failures are recorded in the report, never thrown.
VerificationReport verify_decomposition(const GeneratorSet& input,
                                        const SymplecticDecomposition& d);

// Deterministic corpus generation. All functions consume the engine
// directly so a logged seed reproduces the exact sequence.
GeneratorSet random_generator_set(std::size_t n, std::size_t m, std::mt19937_64& rng);

// m independent rows; m must be <= 2n.
GeneratorSet random_independent_generator_set(std::size_t n, std::size_t m,
                                              std::mt19937_64& rng);

// Full-row-rank generator matrices with derived kernels. Throws
// ValidationError if a full-rank sample is not found within bounded
// retries (practically unreachable for k <= n).
CssCodePair random_css_code(std::size_t n, std::size_t k1, std::size_t k2,
                            std::mt19937_64& rng);

Gf4Code random_gf4_code(std::size_t n, std::size_t k, std::mt19937_64& rng);

// A random generator set of m independent rows together with a basis of
// its centralizer (every element commuting with the whole set), which is
// the full normalizer generating set for the resulting code.
std::pair<GeneratorSet, GeneratorSet> random_stabilizer_with_normalizer(
    std::size_t n, std::size_t m, std::mt19937_64& rng);

}  // namespace logops::oracle

#endif
