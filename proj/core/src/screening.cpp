#include "walg/screening.hpp"

#include <stdexcept>

namespace walg {

Weight ScreeningOp::charge(const RootSystemPtr& rs) const
{
    RatFun g = RatFun::symbol(rs->tab(), "g");
    if (kind == Kind::long_root) return rs->simple_root(root) * g;
    return rs->coroot(root) * (RatFun::constant(rs->tab(), 2) / g);
}

FockState screening_action(const ScreeningOp& op, const FockState& s)
{
    const auto& rs = s.weight().rs();
    const auto& tab = rs->tab();
    Weight charge = op.charge(rs);
    RatFun pair = rs->pairing(charge, s.weight());
    if (!pair.is_constant())
        throw std::domain_error("screening_action: <charge,beta> not constant (single-valuedness)");
    Rat pv = pair.constant_value();
    if (pv.get_den() != 1 || mpz_class(pv.get_num() % 2) != 0)
        throw std::domain_error("screening_action: <charge,beta> not an even integer");
    const long N = mpz_class(pv.get_num() / 2).get_si() - 1;

    const int L = std::max(s.level(), 0);
    Weight shifted = s.weight() + charge;

    // annihilation series E+ = exp(-sum_{n>0} (1/n) <charge, a_n> z^{-n}):
    // w[k] = coefficient of z^{-k} applied to s, level L-k
    std::vector<FockState> w;
    w.reserve(L + 1);
    w.push_back(s);
    for (int j = 1; j <= L; ++j) {
        FockState acc = FockState::zero(s.weight());
        for (int m = 1; m <= j; ++m)
            acc = acc - apply_mode_vec(m, charge, w[j - m]);
        w.push_back(acc * (RatFun::constant(tab, Rat(1, j))));
    }

    // rebase each w[k] to the shifted module, then apply the creation series
    // E- = exp(+sum_{m>0} (1/m) <charge, a_{-m}> z^{m}) and pick z^{N+k}.
    FockState out = FockState::zero(shifted);
    for (int k = 0; k <= L; ++k) {
        long need = N + k;
        if (need < 0) continue;
        FockState base(shifted, std::map<CreationMono, RatFun>(w[k].terms()));
        // S_j via j S_j = sum_m <charge, a_{-m}> S_{j-m}
        std::vector<FockState> Sj;
        Sj.push_back(base);
        for (long j = 1; j <= need; ++j) {
            FockState acc = FockState::zero(shifted);
            for (long m = 1; m <= j; ++m)
                acc = acc + apply_mode_vec(static_cast<int>(-m), charge, Sj[j - m]);
            Sj.push_back(acc * (RatFun::constant(tab, Rat(1, j))));
        }
        out = out + Sj[need];
    }
    return out;
}

std::vector<FockState> kernel_at_level(const RootSystemPtr& rs, int n)
{
    const auto& tab = rs->tab();
    const int rank = rs->rank();
    auto basis = basis_at_level(rank, n);
    const int cols = static_cast<int>(basis.size());
    FockState vac{rs->zero_weight()};

    RatMat m;
    for (int i = 0; i < rank; ++i) {
        ScreeningOp op{ScreeningOp::Kind::long_root, i};
        std::vector<std::vector<RatFun>> images;
        for (const auto& b : basis) {
            FockState st = FockState::zero(rs->zero_weight());
            st.add_term(b, RatFun::constant(tab, 1));
            images.push_back(coords_at_level(screening_action(op, st), n - 1));
        }
        const int out_dim = images.empty() ? 0 : static_cast<int>(images[0].size());
        for (int rrow = 0; rrow < out_dim; ++rrow) {
            RatVec row(cols);
            for (int c = 0; c < cols; ++c) row[c] = images[c][rrow];
            m.push_back(std::move(row));
        }
    }

    std::vector<FockState> out;
    if (m.empty()) { // level 0: kernel is the vacuum line
        out.emplace_back(vac);
        return out;
    }
    for (auto& v : nullspace(m))
        out.push_back(state_from_coords(rs->zero_weight(), n, v));
    return out;
}

std::vector<FockState> composite_span_at_level(const RootSystemPtr& rs,
                                               const std::vector<Current>& gens,
                                               int level)
{
    // build all products of translated generators with total level = `level`
    // (iterated -1st products; associativity choices immaterial for the span)
    std::vector<FockState> out;
    FockState vac{rs->zero_weight()};

    // derivatives of single generators
    std::vector<std::vector<FockState>> ders; // [gen][k] = T^k gen
    for (const auto& g : gens) {
        std::vector<FockState> d = {g.state};
        while (d.back().level() < level) d.push_back(translate_state(d.back()));
        ders.push_back(std::move(d));
    }
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int k = level - gens[gi].spin;
        if (k >= 0 && gens[gi].spin + k == level) out.push_back(ders[gi][k]);
    }
    // pairwise normally ordered products A_(-1) T^j B and deeper products
    std::function<void(FockState, int)> extend = [&](FockState acc, int remaining) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            for (int k = 0; gens[gi].spin + k <= remaining; ++k) {
                const FockState& factor = ders[gi][k];
                Current f = make_current(factor);
                FockState prod = mode_action(f, -f.spin, acc);
                int used = f.spin; // levels add for the -1st product
                int left = remaining - used;
                if (left == 0) out.push_back(prod);
                else if (left >= 2) extend(prod, left);
            }
        }
    };
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (int k = 0; gens[gi].spin + k < level; ++k) {
            int left = level - gens[gi].spin - k;
            if (left >= 2) extend(ders[gi][k], left);
        }
    }
    return out;
}

namespace {

int rank_of_states(const RootSystemPtr& rs, const std::vector<FockState>& states, int level)
{
    if (states.empty()) return 0;
    RatMat m;
    for (const auto& s : states) m.push_back(coords_at_level(s, level));
    return rank(m);
}

} // namespace

Current derive_generator(const RootSystemPtr& rs, int spin)
{
    bool ok = false;
    for (int d : rs->exponents())
        if (d + 1 == spin) ok = true;
    if (!ok) throw std::invalid_argument("derive_generator: spin-1 is not an exponent");

    if (spin == 2) return sugawara_current(rs);

    std::vector<Current> lower;
    for (int d : rs->exponents())
        if (d + 1 < spin) lower.push_back(derive_generator(rs, d + 1));

    auto kernel = kernel_at_level(rs, spin);
    auto comps = composite_span_at_level(rs, lower, spin);
    int base_rank = rank_of_states(rs, comps, spin);

    for (const auto& cand : kernel) {
        auto trial = comps;
        trial.push_back(cand);
        if (rank_of_states(rs, trial, spin) > base_rank) {
            // normalize: first nonzero canonical coordinate = 1
            auto c = coords_at_level(cand, spin);
            for (const auto& x : c) {
                if (!x.is_zero()) return make_current(cand * x.inv());
            }
        }
    }
    throw std::domain_error("derive_generator: no independent kernel element found");
}

bool dual_screening_check(const RootSystemPtr& rs, const Current& cur)
{
    for (int i = 0; i < rs->rank(); ++i) {
        ScreeningOp op{ScreeningOp::Kind::dual, i};
        if (!screening_action(op, cur.state).is_zero()) return false;
    }
    return true;
}

} // namespace walg
