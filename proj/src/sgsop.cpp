#include "logops/sgsop.hpp"

#include <utility>

#include "logops/errors.hpp"

namespace logops {

SymplecticDecomposition sgsop(const GeneratorSet& gs) {
    SymplecticDecomposition d;
    d.n = gs.n;

    std::vector<PauliVector> work = gs.gens;
    const std::size_t m = work.size();
    std::vector<std::size_t> pair_pos;
    std::vector<std::size_t> iso_pos;

    // Worst case is one classification entry per generator plus roughly
    // 3/4 of the m^2/4 update slots; reserving up front keeps the append
    // path off the allocator.
    d.log.reserve(m + m * m / 8);

    std::size_t base = 0;
    while (base < m) {
        // First partner the head anticommutes with, if any.
        std::size_t partner = m;
        for (std::size_t j = base + 1; j < m; ++j) {
            if (symplectic_product(work[base], work[j]) == 1) {
                partner = j;
                break;
            }
        }

        if (partner == m) {
            d.log.push_back({.kind = SgsopStepKind::SetAside,
                             .pos = static_cast<std::uint32_t>(base)});
            iso_pos.push_back(base);
            base += 1;
            continue;
        }

        d.log.push_back({.kind = SgsopStepKind::PairFound,
                         .pos = static_cast<std::uint32_t>(base),
                         .partner = static_cast<std::uint32_t>(partner)});
        std::swap(work[base + 1], work[partner]);

        // g *= a^f(g,b) * b^f(g,a); both exponents are read before g changes.
        const PauliVector& a = work[base];
        const PauliVector& b = work[base + 1];
        for (std::size_t i = base + 2; i < m; ++i) {
            const int exp_a = symplectic_product(work[i], b);
            const int exp_b = symplectic_product(work[i], a);
            if (exp_a == 0 && exp_b == 0) continue;
            if (exp_a) work[i] *= a;
            if (exp_b) work[i] *= b;
            d.log.push_back({.kind = SgsopStepKind::RowUpdate,
                             .exp_a = static_cast<std::uint8_t>(exp_a),
                             .exp_b = static_cast<std::uint8_t>(exp_b),
                             .pos = static_cast<std::uint32_t>(i),
                             .pivot_a = static_cast<std::uint32_t>(base),
                             .pivot_b = static_cast<std::uint32_t>(base + 1)});
        }

        pair_pos.push_back(base);
        base += 2;
    }

    // Mostly-commuting inputs use a small fraction of the reservation.
    if (d.log.capacity() > 2 * d.log.size() + 64) d.log.shrink_to_fit();

    d.pairs.reserve(pair_pos.size());
    for (std::size_t p : pair_pos) {
        d.pairs.emplace_back(std::move(work[p]), std::move(work[p + 1]));
    }
    d.isotropic.reserve(iso_pos.size());
    for (std::size_t p : iso_pos) {
        d.isotropic.push_back(std::move(work[p]));
    }
    return d;
}

std::size_t pair_count(const GeneratorSet& gs) {
    return rank(symplectic_product_matrix(gs)) / 2;
}

GeneratorSet processed_generators(const SymplecticDecomposition& d) {
    GeneratorSet gs(d.n);
    gs.gens.reserve(d.input_size());
    for (const auto& [a, b] : d.pairs) {
        gs.gens.push_back(a);
        gs.gens.push_back(b);
    }
    for (const PauliVector& g : d.isotropic) {
        gs.gens.push_back(g);
    }
    return gs;
}

BinMatrix standard_form_omega(const SymplecticDecomposition& d) {
    return symplectic_product_matrix(processed_generators(d));
}

GeneratorSet replay_inverse(const SymplecticDecomposition& d) {
    const std::size_t m = d.input_size();

    // Rebuild the working list in its final interleaved order from the
    // classification events, then undo the steps newest-first. Every row
    // update is its own inverse (mod-2 addition), and undoing a pair
    // discovery is repeating its swap.
    std::vector<PauliVector> work(m);
    std::vector<bool> filled(m, false);
    std::size_t next_pair = 0;
    std::size_t next_iso = 0;

    const auto place = [&](std::size_t pos, const PauliVector& g) {
        if (pos >= m || filled[pos]) {
            throw ReplayError("log places a generator at an invalid position " +
                              std::to_string(pos));
        }
        work[pos] = g;
        filled[pos] = true;
    };

    for (const SgsopStep& step : d.log) {
        switch (step.kind) {
            case SgsopStepKind::SetAside:
                if (next_iso >= d.isotropic.size()) {
                    throw ReplayError("log claims more isotropic generators than recorded");
                }
                place(step.pos, d.isotropic[next_iso]);
                ++next_iso;
                break;
            case SgsopStepKind::PairFound:
                if (next_pair >= d.pairs.size()) {
                    throw ReplayError("log claims more pairs than recorded");
                }
                place(step.pos, d.pairs[next_pair].first);
                place(step.pos + 1, d.pairs[next_pair].second);
                ++next_pair;
                break;
            case SgsopStepKind::RowUpdate:
                break;
        }
    }
    if (next_pair != d.pairs.size() || next_iso != d.isotropic.size()) {
        throw ReplayError("log does not account for every processed generator");
    }

    for (auto it = d.log.rbegin(); it != d.log.rend(); ++it) {
        const SgsopStep& step = *it;
        switch (step.kind) {
            case SgsopStepKind::RowUpdate:
                if (step.pos >= m || step.pivot_a >= m || step.pivot_b >= m) {
                    throw ReplayError("row update index out of range");
                }
                if (step.exp_a) work[step.pos] *= work[step.pivot_a];
                if (step.exp_b) work[step.pos] *= work[step.pivot_b];
                break;
            case SgsopStepKind::PairFound:
                if (step.pos + 1 >= m || step.partner >= m) {
                    throw ReplayError("pair swap index out of range");
                }
                std::swap(work[step.pos + 1], work[step.partner]);
                break;
            case SgsopStepKind::SetAside:
                break;
        }
    }

    GeneratorSet gs(d.n);
    gs.gens = std::move(work);
    return gs;
}

}  // namespace logops
