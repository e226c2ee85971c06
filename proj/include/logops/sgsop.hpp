#ifndef LOGOPS_SGSOP_HPP
#define LOGOPS_SGSOP_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "logops/gf2.hpp"
#include "logops/pauli.hpp"

namespace logops {

enum class SgsopStepKind : std::uint8_t { SetAside, PairFound, RowUpdate };

// One recorded operation of the orthogonalization sweep. Indices are
// positions in the working list, which starts as the input list and ends
// as the processed list (pairs and isotropic generators interleaved in
// discovery order). The log holds one entry per effective row update, so
// entries are kept at 20 bytes.
struct SgsopStep {
    SgsopStepKind kind = SgsopStepKind::SetAside;

    // RowUpdate only: the commutation exponents applied to each pivot.
    std::uint8_t exp_a = 0;
    std::uint8_t exp_b = 0;

    // SetAside: position of the commuting generator.
    // PairFound: position of the first pair member; the partner was swapped
    //            into pos+1 from `partner`.
    // RowUpdate: position of the updated generator.
    std::uint32_t pos = 0;

    // PairFound only: pre-swap position of the second pair member.
    std::uint32_t partner = 0;

    // RowUpdate only: positions of the two pair members multiplied in.
    std::uint32_t pivot_a = 0;
    std::uint32_t pivot_b = 0;

    bool operator==(const SgsopStep&) const = default;
};

// Output of the symplectic Gram-Schmidt orthogonalization: symplectic
// pairs and isotropic remainder in discovery order, plus the operation log
// that makes the procedure reversible.
//
// Invariants (checked by the test suites, not re-verified on access):
//   - symplectic_product(a, b) == 1 within each pair
//   - any two generators not in the same pair commute
//   - 2*pairs.size() + isotropic.size() == input size
struct SymplecticDecomposition {
    std::size_t n = 0;
    std::vector<std::pair<PauliVector, PauliVector>> pairs;
    std::vector<PauliVector> isotropic;
    std::vector<SgsopStep> log;

    std::size_t input_size() const { return 2 * pairs.size() + isotropic.size(); }
};

// Symplectic Gram-Schmidt orthogonalization. Scans the working list front
// to back: a generator commuting with everything after it is set aside as
// isotropic; otherwise it is paired with the first generator it
// anticommutes with, every later generator g gets the update
// g *= a^f(g,b) * b^f(g,a), and the pair is set aside. Deterministic for a
// given input order. Runs in O(n m^2) bit operations / 64 per word.
SymplecticDecomposition sgsop(const GeneratorSet& gs);

// Pair count by the rank route: rank(symplectic product matrix) / 2.
// Always equals sgsop(gs).pairs.size(); the two paths are independent and
// cross-checked in the tests.
std::size_t pair_count(const GeneratorSet& gs);

// Pairs first (flattened), then isotropic generators.
GeneratorSet processed_generators(const SymplecticDecomposition& d);

// Symplectic product matrix of processed_generators(d). Equals the
// direct sum of one [[0,1],[1,0]] block per pair followed by a 1x1 zero
// block per isotropic generator.
BinMatrix standard_form_omega(const SymplecticDecomposition& d);

// Exact reconstruction of the input generator list, order included, by
// replaying the log backwards. Throws ReplayError if the log is
// inconsistent with the decomposition's contents.
GeneratorSet replay_inverse(const SymplecticDecomposition& d);

}  // namespace logops

#endif
