#include "walg/currents.hpp"

#include <functional>
#include <stdexcept>

namespace walg {

Current make_current(FockState vacuum_state)
{
    if (!vacuum_state.weight().is_zero())
        throw std::invalid_argument("make_current: state not in the vacuum module");
    int lvl = 0;
    if (!vacuum_state.is_homogeneous(&lvl))
        throw std::invalid_argument("make_current: state not homogeneous");
    return Current{std::move(vacuum_state), lvl < 0 ? 0 : lvl};
}

FockState sugawara_mode(int n, const FockState& s)
{
    const auto& rs = *s.weight().rs();
    const auto& tab = rs.tab();
    const int r = rs.rank();
    FockState out = FockState::zero(s.weight());

    // -(n+1) <Q, a_n>
    if (n != -1) {
        Weight q = rs.background_charge();
        out = out + apply_mode_vec(n, q, s) * Rat(-(n + 1));
    }

    // - sum_m :<a_{n-m}, a_m>:  with normal ordering (creators left)
    const int L = std::max(s.level(), 0);
    const auto& ginv = rs.gram_inv();
    for (int m = -(L + std::abs(n) + 2); m <= L + std::abs(n) + 2; ++m) {
        int k = n - m; // the partner index
        // normal order: apply the larger index first (annihilators right)
        int first = std::max(m, k);
        int second = std::min(m, k);
        // each unordered pair {m, k} appears twice in the sum over m unless m == k
        if (m > k) continue;
        Rat mult = (m == k) ? 1 : 2;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                if (ginv[i][j] == 0) continue;
                FockState t = apply_mode({first, j}, s);
                if (t.is_zero()) continue;
                t = apply_mode({second, i}, t);
                if (t.is_zero()) continue;
                out = out + t * (RatFun::constant(tab, -mult * ginv[i][j]));
            }
        }
    }
    return out;
}

namespace {

// binomial-expansion coefficient of the mode series of d^{k-1} <u,dPhi>/(k-1)!:
// the z^{-m-k} coefficient is C(m,k) <u, a_m> with C = (-1)^{k-1} binom(m+k-1, k-1).
Rat series_coeff(int m, int k)
{
    mpz_class num(1);
    for (int i = 0; i < k - 1; ++i) num *= (m + k - 1 - i);
    mpz_class den(1);
    for (int i = 2; i <= k - 1; ++i) den *= i;
    Rat c(num, den);
    c.canonicalize();
    if ((k - 1) % 2) c = -c;
    return c;
}

} // namespace

FockState mode_action(const Current& cur, int N, const FockState& s)
{
    const auto& rs = *s.weight().rs();
    const auto& tab = rs.tab();
    FockState out = FockState::zero(s.weight());
    const int L = std::max(s.level(), 0);

    for (const auto& [mono, coeff] : cur.state.terms()) {
        const int p = static_cast<int>(mono.modes.size());
        if (p == 0) {
            // identity component contributes only at N = -0 with the unit field
            if (N == 0) out = out + s * coeff;
            continue;
        }
        // factor k has depth n_k = -mono.modes[k].n >= 1 and direction dir_k
        std::vector<int> depth(p), dir(p);
        for (int k = 0; k < p; ++k) {
            depth[k] = -mono.modes[k].n;
            dir[k] = mono.modes[k].dir;
        }
        // enumerate assignments m_1..m_p with sum = N;
        // annihilation total <= L, creation total = annih - N <= L - N
        if (L - N < 0) continue;
        std::vector<int> ms(p);
        std::function<void(int, int, int, int)> rec =
            [&](int k, int sum, int annih, int creat) {
                if (k == p) {
                    // apply: annihilators first (descending), then zero, then creators
                    std::vector<int> order(p);
                    for (int i = 0; i < p; ++i) order[i] = i;
                    std::sort(order.begin(), order.end(),
                              [&](int a, int b) { return ms[a] > ms[b]; });
                    Rat c(1);
                    for (int idx : order) {
                        c *= series_coeff(ms[idx], depth[idx]);
                        if (c == 0) return;
                    }
                    FockState t = s;
                    for (int idx : order) {
                        t = apply_mode({ms[idx], dir[idx]}, t);
                        if (t.is_zero()) return;
                    }
                    out = out + t * (coeff * c);
                    return;
                }
                // factor k: annihilation budget L - annih, creation budget L - N - creat
                int lo = -(L - N - creat);
                int hi = L - annih;
                if (k == p - 1) {
                    int m = N - sum;
                    if (m < lo || m > hi) return;
                    ms[k] = m;
                    rec(p, sum + m, annih + (m > 0 ? m : 0), creat + (m < 0 ? -m : 0));
                    return;
                }
                for (int m = lo; m <= hi; ++m) {
                    ms[k] = m;
                    rec(k + 1, sum + m,
                        annih + (m > 0 ? m : 0), creat + (m < 0 ? -m : 0));
                }
            };
        rec(0, 0, 0, 0);
    }
    return out;
}

FockState translate_state(const FockState& v)
{
    if (!v.weight().is_zero())
        throw std::invalid_argument("translate_state: not a vacuum state");
    FockState out = FockState::zero(v.weight());
    for (const auto& [mono, c] : v.terms()) {
        for (size_t k = 0; k < mono.modes.size(); ++k) {
            CreationMono mm = mono;
            int n = mm.modes[k].n;
            mm.modes[k].n = n - 1;
            std::sort(mm.modes.begin(), mm.modes.end());
            out.add_term(mm, c * Rat(-n));
        }
    }
    return out;
}

Current translate(const Current& a) { return make_current(translate_state(a.state)); }

Current nth_product(const Current& a, const Current& b, int j)
{
    return make_current(mode_action(a, j + 1 - a.spin, b.state));
}

Current sugawara_current(const RootSystemPtr& rs)
{
    FockState vac{rs->zero_weight()};
    return make_current(sugawara_mode(-2, vac));
}

std::vector<Current> miura_type_a(const RootSystemPtr& rs)
{
    if (rs->family() != RootSystem::Family::A)
        throw std::invalid_argument("miura_type_a: root system not of type A");
    const auto& tab = rs->tab();
    const int n = rs->rank() + 1;
    RatFun g = RatFun::symbol(tab, "g");
    RatFun qhalf = (g + RatFun::constant(tab, 2) / g) * Rat(1, 2);

    auto h = rs->type_a_h_weights();
    FockState vac{rs->zero_weight()};

    // operator sum_j Y(S_j, z) d^j, built by composing (q/2 d + <h_k, dPhi>)
    std::vector<FockState> S = {vac};
    for (int k = 0; k < n; ++k) {
        std::vector<FockState> T(S.size() + 1, FockState::zero(rs->zero_weight()));
        for (size_t j = 0; j < S.size(); ++j) {
            if (S[j].is_zero()) continue;
            T[j + 1] = T[j + 1] + S[j] * qhalf;
            T[j] = T[j] + translate_state(S[j]) * qhalf;
            T[j] = T[j] + apply_mode_vec(-1, h[k], S[j]);
        }
        S = std::move(T);
    }

    // W^s = 2 * S_{n-s} / (q/2)^{n-s}, spins 2..n
    std::vector<Current> out;
    for (int s = 2; s <= n; ++s) {
        FockState w = S[n - s] * (qhalf.pow(-(n - s)) * Rat(2));
        out.push_back(make_current(std::move(w)));
    }
    return out;
}

} // namespace walg
