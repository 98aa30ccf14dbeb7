#pragma once

#include <optional>

#include "walg/screening.hpp"

namespace walg {

/// PBW word in the negative modes of the generating currents, highest spin
/// leftmost. Partitions are stored descending; a partition (l1 >= ... >= lk)
/// stands for the operator X_{-lk} ... X_{-l1} (largest mode applied first).
struct PBWWord {
    std::vector<std::vector<int>> parts; // parts[j] = partition for generator j (ascending spin)

    int level() const
    {
        int l = 0;
        for (const auto& p : parts)
            for (int x : p) l += x;
        return l;
    }
    bool operator<(const PBWWord& o) const { return parts < o.parts; }
    bool operator==(const PBWWord& o) const { return parts == o.parts; }
};

/// Exact linear dependency among descendants of |alpha>: the combination
/// sum_w coeff_w * (word w applied to |alpha>) vanishes identically.
struct NullVector {
    int level = 0;
    Weight alpha;
    std::map<PBWWord, RatFun> coeffs;
};

/// Apply a PBW word (built over the given generator list, ascending spin;
/// the spin-2 slot uses the Sugawara action) to |alpha>.
FockState descendant_state(const PBWWord& word, const std::vector<Current>& gens,
                           const Weight& alpha);

/// All PBW words of the exact level, parts >= min_part per generator.
std::vector<PBWWord> pbw_words_at_level(int ngens, int level, int min_part = 1);

/// Exact nullspace of the PBW-to-Fock matrix at the given level.
std::vector<NullVector> find_null_vectors(const std::vector<Current>& gens,
                                          const Weight& alpha, int level);

/// For each level n <= max_level, look for the reduced relation
///   X^{top}_{-n}|alpha> + sum_{|lambda|=n} c_lambda L_{-lambda}|alpha> = 0
/// (pure top-generator mode plus Virasoro words only). Returns the found
/// relations; a level with no such relation contributes nothing.
std::vector<NullVector> null_ideal(const std::vector<Current>& gens, const Weight& alpha,
                                   int max_level);

/// Rank-1 self-contained search: values kappa (alpha = kappa * omega_1) where
/// the level-2 Virasoro matrix degenerates, with the corresponding null vector.
struct VirasoroDegenerate {
    RatFun kappa;       // in terms of g
    NullVector relation; // L_{-1}^2 + t L_{-2} normalized
};
std::vector<VirasoroDegenerate> virasoro_level2_null(const RootSystemPtr& rs);

std::string pbw_to_string(const PBWWord& w, const std::vector<int>& spins);

} // namespace walg
