#include <doctest.h>

#include <random>

#include "walg/linalg.hpp"
#include "walg/ratfun.hpp"

using namespace walg;

namespace {

SymTab tab_gk()
{
    return SymbolTable::make({{"k", SymbolTable::Role::module_param},
                              {"x", SymbolTable::Role::point}});
}

RatFun rnd_ratfun(SymTab tab, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-6, 6), pw(0, 2);
    auto rnd_poly = [&]() {
        Poly p = Poly::zero(tab);
        for (int t = 0; t < 3; ++t) {
            Mono m(tab->size());
            for (int v = 0; v < tab->size(); ++v) {
                m.e[v] = pw(rng);
                m.deg += m.e[v];
            }
            p.add_term(m, coef(rng));
        }
        return p;
    };
    Poly den = Poly::zero(tab);
    while (den.is_zero()) den = rnd_poly();
    return RatFun(rnd_poly(), den);
}

} // namespace

TEST_CASE("ratfun basic arithmetic and canonical form")
{
    auto tab = tab_gk();
    RatFun g = RatFun::symbol(tab, "g");
    RatFun two = RatFun::constant(tab, 2);

    // g + 2/g = (g^2+2)/g
    RatFun s = g + two / g;
    CHECK(s.to_string() == "(g^2 + 2)/g");

    // x + 0 = x
    RatFun x = RatFun::symbol(tab, "x");
    CHECK(x + RatFun::zero(tab) == x);

    // (g^2-4)/(g-2) reduces to g+2
    RatFun gm2 = g - two;
    RatFun r = (g * g - two * two) / gm2;
    CHECK(r == g + two);

    CHECK(g.inv().to_string() == "1/g");
    CHECK(g * (two / g) == two);
    CHECK((RatFun::zero(tab) * s).is_zero());

    // eval
    CHECK(s.eval({{"g", Rat(1)}}) == Rat(3));
    CHECK_THROWS_AS((two / gm2).eval({{"g", Rat(2)}}), std::domain_error);
}

TEST_CASE("field axioms and eval homomorphism on random values")
{
    auto tab = tab_gk();
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 40; ++iter) {
        RatFun a = rnd_ratfun(tab, rng), b = rnd_ratfun(tab, rng), c = rnd_ratfun(tab, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }

    std::uniform_int_distribution<int> val(1, 30);
    int done = 0;
    std::mt19937 rng2(777);
    while (done < 100) {
        RatFun a = rnd_ratfun(tab, rng2), b = rnd_ratfun(tab, rng2), c = rnd_ratfun(tab, rng2);
        std::map<std::string, Rat> pt = {{"g", Rat(val(rng2), val(rng2))},
                                         {"k", Rat(val(rng2), val(rng2))},
                                         {"x", Rat(val(rng2), val(rng2))}};
        try {
            Rat lhs = (a * b + c).eval(pt);
            CHECK(lhs == a.eval(pt) * b.eval(pt) + c.eval(pt));
            ++done;
        } catch (const std::domain_error&) {
            // pole at the sample point, resample
        }
    }
}

TEST_CASE("poly gcd on engineered common factors")
{
    auto tab = tab_gk();
    std::mt19937 rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        RatFun a = rnd_ratfun(tab, rng), b = rnd_ratfun(tab, rng), c = rnd_ratfun(tab, rng);
        Poly pa = a.num(), pb = b.num(), pc = c.num();
        if (pc.is_zero()) continue;
        Poly g = poly_gcd(pa * pc, pb * pc);
        // gcd must be divisible by pc
        CHECK_NOTHROW(g.exact_div(poly_gcd(pc, g)));
        Poly q = g.exact_div(poly_gcd(pc, g));
        (void)q;
        // and must divide both products
        CHECK_NOTHROW((pa * pc).exact_div(g));
        CHECK_NOTHROW((pb * pc).exact_div(g));
    }
}

TEST_CASE("nullspace: trivial, one-dimensional, and random-rank oracle")
{
    auto tab = tab_gk();
    auto one = RatFun::constant(tab, 1);
    auto zero = RatFun::zero(tab);
    RatFun g = RatFun::symbol(tab, "g");

    // identity has empty nullspace
    CHECK(nullspace({{one, zero}, {zero, one}}).empty());

    // [g, -g] has nullspace span{(1,1)}
    auto ns = nullspace({{g, -g}});
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * g == ns[0][1] * g);

    // random 2x3 rank-2 case against brute-force elimination over Q
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-9, 9);
    int done = 0;
    while (done < 20) {
        RatMat m(2, RatVec(3));
        long a[2][3];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) {
                a[i][j] = coef(rng);
                m[i][j] = RatFun::constant(tab, a[i][j]);
            }
        // brute-force cross product gives the nullspace direction
        long cx = a[0][1] * a[1][2] - a[0][2] * a[1][1];
        long cy = a[0][2] * a[1][0] - a[0][0] * a[1][2];
        long cz = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if (cx == 0 && cy == 0 && cz == 0) continue; // rank < 2
        auto basis = nullspace(m);
        REQUIRE(basis.size() == 1);
        // returned vector must annihilate m exactly
        for (int i = 0; i < 2; ++i) {
            RatFun acc = zero;
            for (int j = 0; j < 3; ++j) acc += m[i][j] * basis[0][j];
            CHECK(acc.is_zero());
        }
        // and be parallel to the cross product
        RatFun x = RatFun::constant(tab, cx), y = RatFun::constant(tab, cy),
               z = RatFun::constant(tab, cz);
        CHECK((basis[0][0] * y == basis[0][1] * x));
        CHECK((basis[0][1] * z == basis[0][2] * y));
        ++done;
    }

    // dim(nullspace) + rank = columns on a random 4x6 symbolic matrix
    std::mt19937 rng2(7);
    RatMat big(4, RatVec(6));
    for (auto& row : big)
        for (auto& e : row) e = rnd_ratfun(tab, rng2);
    int r = rank(big);
    auto nb = nullspace(big);
    CHECK(r + static_cast<int>(nb.size()) == 6);
    for (const auto& v : nb)
        for (int i = 0; i < 4; ++i) {
            RatFun acc = zero;
            for (int j = 0; j < 6; ++j) acc += big[i][j] * v[j];
            CHECK(acc.is_zero());
        }
}

TEST_CASE("derivative and lift")
{
    auto tab = tab_gk();
    RatFun g = RatFun::symbol(tab, "g");
    RatFun f = (g * g + RatFun::constant(tab, 2)) / g;
    // d/dg (g + 2/g) = 1 - 2/g^2
    RatFun d = f.derivative("g");
    RatFun expect = RatFun::constant(tab, 1) - RatFun::constant(tab, 2) / (g * g);
    CHECK(d == expect);

    auto big = SymbolTable::make({{"z", SymbolTable::Role::point},
                                  {"k", SymbolTable::Role::module_param},
                                  {"x", SymbolTable::Role::point}});
    RatFun lifted = f.lift(big);
    CHECK(lifted.eval({{"g", Rat(3)}}) == f.eval({{"g", Rat(3)}}));
}
