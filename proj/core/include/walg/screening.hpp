#pragma once

#include "walg/currents.hpp"
#include "walg/linalg.hpp"

namespace walg {

/// Screening operator Q_i^+ (long, charge g e_i) or its dual (charge (2/g) e_i^vee).
struct ScreeningOp {
    enum class Kind { long_root, dual };
    Kind kind;
    int root; // 0-based simple-root index

    Weight charge(const RootSystemPtr& rs) const;
};

/// Residue of the bosonic vertex operator with the given charge acting on s:
/// maps V_beta -> V_{beta + charge}. Requires <charge, beta> to be an even
/// integer constant (single-valuedness); throws std::domain_error otherwise.
FockState screening_action(const ScreeningOp& op, const FockState& s);

/// Basis of the intersection of the kernels of all long screenings on the
/// level-n subspace of the vacuum module.
std::vector<FockState> kernel_at_level(const RootSystemPtr& rs, int n);

/// W-algebra generator of the given spin: an element of kernel_at_level(spin)
/// independent of normally ordered products and derivatives of lower-spin
/// generators. Normalization: first nonzero coordinate in the canonical
/// level basis equals 1 (spin 2 returns the Segal-Sugawara vector exactly).
Current derive_generator(const RootSystemPtr& rs, int spin);

/// True when the current is annihilated by every dual screening.
bool dual_screening_check(const RootSystemPtr& rs, const Current& cur);

/// Span of all normally ordered products and T-derivatives of the given
/// currents at the given level, as vacuum states.
std::vector<FockState> composite_span_at_level(const RootSystemPtr& rs,
                                               const std::vector<Current>& gens,
                                               int level);

} // namespace walg
