#pragma once

#include "walg/currents.hpp"

namespace walg {

/// The explicit B2 spin-4 current state, decoded from its mode-variable
/// polynomial into simple-root-basis Fock coordinates. The mode variables
/// live along the orthonormal pair (e_1 + e_2, e_2); phi_{n,i} stands for
/// (1/n) <eps_i, a_{-n}>. This is the specific kernel element whose modes
/// the singular-vector tables are written in.
FockState b2_w4_state(const RootSystemPtr& rs);

/// Same state as a Current, verified to be annihilated by both long
/// screenings (throws std::domain_error if the check fails).
Current b2_w4_current(const RootSystemPtr& rs);

} // namespace walg
