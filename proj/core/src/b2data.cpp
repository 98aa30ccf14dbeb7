#include "walg/b2data.hpp"

#include <stdexcept>

#include "walg/screening.hpp"

namespace walg {

namespace {

struct PhiTerm {
    int gpow;                              // power of g in the coefficient
    Rat c;                                 // rational coefficient
    std::vector<std::pair<int, int>> phis; // (n, i) factors, i in {1,2}
};

// coefficient tables of the spin-4 current in the phi_{n,i} variables
const std::vector<PhiTerm>& phi_terms()
{
    static const std::vector<PhiTerm> t = {
        {3, 12, {{4, 1}}},
        {3, 24, {{4, 2}}},

        {2, 1, {{2, 1}, {2, 1}}},
        {2, -8, {{2, 2}, {2, 2}}},
        {2, -12, {{1, 1}, {3, 2}}},
        {2, -24, {{1, 2}, {3, 2}}},

        {1, -6, {{2, 1}, {1, 1}, {1, 1}}},
        {1, -12, {{1, 2}, {2, 1}, {1, 1}}},
        {1, 16, {{1, 2}, {2, 2}, {1, 1}}},
        {1, -4, {{2, 1}, {1, 2}, {1, 2}}},
        {1, 122, {{4, 1}}},
        {1, 16, {{1, 2}, {1, 2}, {2, 2}}},
        {1, 240, {{4, 2}}},

        {0, 1, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}},
        {0, 4, {{1, 2}, {1, 1}, {1, 1}, {1, 1}}},
        {0, -8, {{1, 2}, {1, 2}, {1, 2}, {1, 1}}},
        {0, -72, {{3, 2}, {1, 1}}},
        {0, -4, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}},
        {0, -144, {{3, 2}, {1, 2}}},
        {0, -12, {{2, 1}, {2, 1}}},
        {0, -72, {{2, 2}, {2, 2}}},
        {0, -48, {{2, 1}, {2, 2}}},

        {-1, -16, {{2, 1}, {1, 1}, {1, 1}}},
        {-1, 8, {{2, 2}, {1, 1}, {1, 1}}},
        {-1, -32, {{1, 2}, {2, 1}, {1, 1}}},
        {-1, 48, {{1, 2}, {2, 2}, {1, 1}}},
        {-1, 384, {{4, 1}}},
        {-1, 48, {{1, 2}, {1, 2}, {2, 2}}},
        {-1, 760, {{4, 2}}},

        {-2, -32, {{2, 1}, {2, 1}}},
        {-2, -128, {{2, 2}, {2, 1}}},
        {-2, -144, {{2, 2}, {2, 2}}},
        {-2, -96, {{1, 1}, {3, 2}}},
        {-2, -192, {{1, 2}, {3, 2}}},

        {-3, 384, {{4, 1}}},
        {-3, 768, {{4, 2}}},
    };
    return t;
}

} // namespace

FockState b2_w4_state(const RootSystemPtr& rs)
{
    if (rs->code() != "B2") throw std::invalid_argument("b2_w4_state: B2 required");
    const auto& tab = rs->tab();
    RatFun g = RatFun::symbol(tab, "g");

    // phi_{n,i} = (1/n) <e_i, a_{-n}>; the overall factor 2 puts the current in
    // the frame in which the level-1 singular-vector coefficients hold with a
    // unit w-mode coefficient.
    FockState out = FockState::zero(rs->zero_weight());
    for (const auto& term : phi_terms()) {
        FockState s{rs->zero_weight()};
        for (const auto& [n, i] : term.phis)
            s = apply_mode_vec(-n, rs->simple_root(i - 1), s) * Rat(1, n);
        out = out + s * (g.pow(term.gpow) * term.c);
    }
    return out * Rat(2);
}

Current b2_w4_current(const RootSystemPtr& rs)
{
    FockState w = b2_w4_state(rs);
    for (int i = 0; i < 2; ++i) {
        ScreeningOp op{ScreeningOp::Kind::long_root, i};
        if (!screening_action(op, w).is_zero())
            throw std::domain_error("b2_w4_current: state not in the screening kernel");
    }
    return make_current(std::move(w));
}

} // namespace walg
