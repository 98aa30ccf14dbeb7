#pragma once

#include <map>
#include <vector>

#include "walg/rootsystem.hpp"

namespace walg {

/// Heisenberg mode <e_dir, a_n> in the real form a_n := i A_n, so
/// [<u,a_n>, <v,a_m>] = -(n/2) <u,v> delta_{n,-m} and <u,a_0>|b> = -<u,b>/2 |b>.
struct Mode {
    int n;   // mode index
    int dir; // simple-root direction, 0-based

    bool operator<(const Mode& o) const { return n != o.n ? n < o.n : dir < o.dir; }
    bool operator==(const Mode& o) const { return n == o.n && dir == o.dir; }
};

/// Creation monomial: sorted multiset of modes with n < 0.
struct CreationMono {
    std::vector<Mode> modes; // kept sorted

    int level() const
    {
        int l = 0;
        for (const auto& m : modes) l -= m.n;
        return l;
    }
    bool operator<(const CreationMono& o) const { return modes < o.modes; }
    bool operator==(const CreationMono& o) const { return modes == o.modes; }
};

/// Finite linear combination of creation monomials on a highest-weight
/// vector |alpha>. Immutable value semantics; coefficients exact.
class FockState {
public:
    FockState() = default;
    explicit FockState(Weight alpha); // |alpha> itself
    FockState(Weight alpha, std::map<CreationMono, RatFun> terms);

    static FockState zero(Weight alpha) { return FockState(std::move(alpha), {}); }

    const Weight& weight() const { return alpha_; }
    const std::map<CreationMono, RatFun>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const SymTab& tab() const { return alpha_.rs()->tab(); }

    /// max level over monomials (-1 when zero)
    int level() const;
    bool is_homogeneous(int* level_out = nullptr) const;

    FockState operator+(const FockState& o) const;
    FockState operator-(const FockState& o) const;
    FockState operator-() const;
    FockState operator*(const RatFun& c) const;
    FockState operator*(const Rat& c) const;
    bool operator==(const FockState& o) const;

    void add_term(const CreationMono& m, const RatFun& c);

    /// coefficient of a monomial (zero if absent)
    RatFun coeff(const CreationMono& m) const;

    std::string to_string() const;

private:
    Weight alpha_;
    std::map<CreationMono, RatFun> terms_;
};

/// Apply the mode <e_{dir}, a_n> (any sign of n) to a state.
FockState apply_mode(Mode m, const FockState& s);

/// Apply <u, a_n> for a general weight-space vector u (root-basis coords).
FockState apply_mode_vec(int n, const Weight& u, const FockState& s);

/// All creation monomials of total level n for the given rank (canonical order).
std::vector<CreationMono> basis_at_level(int rank, int n);

/// Coordinates of the level-n homogeneous component in basis_at_level order.
std::vector<RatFun> coords_at_level(const FockState& s, int n);

/// Build a state from level-n coordinates.
FockState state_from_coords(const Weight& alpha, int n, const std::vector<RatFun>& c);

std::string mono_to_string(const CreationMono& m);

} // namespace walg
