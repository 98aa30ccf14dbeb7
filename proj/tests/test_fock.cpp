#include <doctest.h>

#include <random>

#include "walg/fock.hpp"

using namespace walg;

namespace {

SymTab tab_k() { return SymbolTable::make({{"k", SymbolTable::Role::module_param}}); }

} // namespace

TEST_CASE("basis counting matches the partition generating function")
{
    // coefficients of prod (1-q^j)^{-r}
    auto count = [](int rank, int n) {
        std::vector<long> c(n + 1, 0);
        c[0] = 1;
        for (int rep = 0; rep < rank; ++rep)
            for (int j = 1; j <= n; ++j)
                for (int m = j; m <= n; ++m) c[m] += c[m - j];
        return c[n];
    };
    for (int rank : {1, 2, 3}) {
        for (int n = 0; n <= 6; ++n) {
            CAPTURE(rank);
            CAPTURE(n);
            CHECK(static_cast<long>(basis_at_level(rank, n).size()) == count(rank, n));
        }
    }
    CHECK(basis_at_level(2, 0).size() == 1);
    CHECK(basis_at_level(2, 1).size() == 2);
    CHECK(basis_at_level(2, 4).size() == 20);
}

TEST_CASE("mode actions: annihilator, contraction, zero mode")
{
    auto tab = tab_k();
    auto rs = RootSystem::make("B2", tab);
    RatFun kappa = RatFun::symbol(tab, "k");
    Weight alpha = rs->fundamental_coweight(0) * kappa;
    FockState va{alpha};

    // a_1 |alpha> = 0
    for (int d = 0; d < 2; ++d) CHECK(apply_mode({1, d}, va).is_zero());

    // a_1^i a_{-1}^j |alpha> = -(1/2) G_ij |alpha>
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            FockState s = apply_mode({1, i}, apply_mode({-1, j}, va));
            FockState expect = va * RatFun::constant(tab, -rs->gram()[i][j] / 2);
            CHECK(s == expect);
        }

    // <u, a_0>|alpha> = -(1/2) <u, alpha> |alpha>
    for (int i = 0; i < 2; ++i) {
        FockState s = apply_mode({0, i}, va);
        RatFun scal = rs->pairing(rs->simple_root(i), alpha) * Rat(-1, 2);
        CHECK(s == va * scal);
    }
}

TEST_CASE("normal-ordering confluence and level bookkeeping on random words")
{
    auto tab = tab_k();
    auto rs = RootSystem::make("B2", tab);
    RatFun kappa = RatFun::symbol(tab, "k");
    Weight alpha = rs->fundamental_coweight(1) * kappa;

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> nmode(-3, 3), dmode(0, 1), len(2, 6);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Mode> word;
        int L = len(rng);
        for (int i = 0; i < L; ++i) {
            int n = nmode(rng);
            word.push_back({n, dmode(rng)});
        }
        FockState s{alpha};
        int level = 0;
        for (const auto& m : word) {
            s = apply_mode(m, s);
            level -= m.n;
            if (s.is_zero()) break;
        }
        if (!s.is_zero()) {
            int l = -1;
            CHECK(s.is_homogeneous(&l));
            CHECK(l == level);
        }

        // commuting two adjacent modes changes the result only by the bracket
        if (word.size() >= 2) {
            FockState ab{alpha}, ba{alpha};
            Mode m1 = word[0], m2 = word[1];
            ab = apply_mode(m2, apply_mode(m1, ab));
            ba = apply_mode(m1, apply_mode(m2, ba));
            FockState diff = ab - ba;
            // [a_n, a_m] = -(n/2) G delta_{n+m,0}
            FockState expect = FockState::zero(alpha);
            if (m2.n + m1.n == 0) {
                Rat c = -Rat(m2.n, 2) * rs->gram()[m2.dir][m1.dir];
                expect = FockState{alpha} * RatFun::constant(tab, c);
            }
            CHECK(diff == expect);
        }
    }
}

TEST_CASE("coords round trip")
{
    auto tab = tab_k();
    auto rs = RootSystem::make("B2", tab);
    Weight alpha = rs->zero_weight();
    for (int n : {0, 1, 3}) {
        auto basis = basis_at_level(2, n);
        std::vector<RatFun> c;
        for (size_t i = 0; i < basis.size(); ++i)
            c.push_back(RatFun::constant(tab, Rat(static_cast<long>(2 * i + 1), 3)));
        FockState s = state_from_coords(alpha, n, c);
        CHECK(coords_at_level(s, n) == c);
    }
}
