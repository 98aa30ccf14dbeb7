#pragma once

#include "walg/fock.hpp"

namespace walg {

/// Vacuum-module state standing for a normal-ordered differential polynomial
/// in the field derivatives, via the state-operator correspondence. A factor
/// <e_i, a_{-k}> corresponds to d^{k-1}<e_i, dPhi(z)> / (k-1)!.
struct Current {
    FockState state; // alpha = 0
    int spin = 0;    // level of the (homogeneous) state

    const RootSystemPtr& rs() const { return state.weight().rs(); }
};

Current make_current(FockState vacuum_state);

/// Virasoro mode L_n in the Segal-Sugawara form
/// L_n = -(n+1)<Q, a_n> - sum_m :<a_{n-m}, a_m>: .
FockState sugawara_mode(int n, const FockState& s);

/// Physical mode of a current: coefficient of z^{-N-spin} in its field,
/// applied to an arbitrary Fock state. Finite by level bounds.
FockState mode_action(const Current& cur, int N, const FockState& s);

/// Translation operator T on vacuum states: shifts each factor a_{-k} to
/// a_{-k-1} with weight k (derivative of the corresponding field).
FockState translate_state(const FockState& vacuum_state);
Current translate(const Current& a);

/// VOA n-th product A_(j) B, realized as mode_action(A, j + 1 - spin_A, B).
Current nth_product(const Current& a, const Current& b, int j);

/// Type-A quantum Miura transform: returns currents of spins 2..n for sl(n),
/// normalized so that the spin-2 current is exactly the Segal-Sugawara vector.
std::vector<Current> miura_type_a(const RootSystemPtr& rs);

/// The Segal-Sugawara conformal vector L_{-2}|0> as a Current.
Current sugawara_current(const RootSystemPtr& rs);

} // namespace walg
