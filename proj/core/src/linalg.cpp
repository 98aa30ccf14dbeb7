#include "walg/linalg.hpp"

#include <stdexcept>

namespace walg {

namespace {

SymTab mat_tab(const RatMat& m)
{
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.tab()) return e.tab();
    throw std::invalid_argument("linalg: empty matrix");
}

// Clear denominators row by row; entries become polynomials.
std::vector<std::vector<Poly>> to_poly_rows(const RatMat& m, SymTab tab)
{
    std::vector<std::vector<Poly>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Poly lcm = Poly::constant(tab, 1);
        for (const auto& e : row) {
            if (e.is_zero()) continue;
            Poly g = poly_gcd(lcm, e.den());
            lcm = lcm * e.den().exact_div(g);
        }
        std::vector<Poly> prow;
        prow.reserve(row.size());
        for (const auto& e : row)
            prow.push_back(e.num() * lcm.exact_div(e.den()));
        out.push_back(std::move(prow));
    }
    return out;
}

struct Echelon {
    std::vector<std::vector<Poly>> rows;
    std::vector<int> pivot_col; // per eliminated row
};

// Bareiss fraction-free elimination with column pivoting by first nonzero.
Echelon bareiss(std::vector<std::vector<Poly>> a, SymTab tab)
{
    const int nr = static_cast<int>(a.size());
    const int nc = nr ? static_cast<int>(a[0].size()) : 0;
    Echelon e;
    Poly prev = Poly::constant(tab, 1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        // pivot row: smallest polynomial in column c (by term count) to slow growth
        int piv = -1;
        for (int i = r; i < nr; ++i) {
            if (a[i][c].is_zero()) continue;
            if (piv < 0 || a[i][c].terms().size() < a[piv][c].terms().size()) piv = i;
        }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                Poly t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = t.exact_div(prev);
            }
            a[i][c] = Poly::zero(tab);
        }
        prev = a[r][c];
        e.pivot_col.push_back(c);
        ++r;
    }
    e.rows = std::move(a);
    return e;
}

} // namespace

int rank(const RatMat& m)
{
    if (m.empty()) return 0;
    SymTab tab = mat_tab(m);
    auto e = bareiss(to_poly_rows(m, tab), tab);
    return static_cast<int>(e.pivot_col.size());
}

std::vector<RatVec> nullspace(const RatMat& m)
{
    if (m.empty()) return {};
    SymTab tab = mat_tab(m);
    const int nc = static_cast<int>(m[0].size());
    auto ech = bareiss(to_poly_rows(m, tab), tab);
    const int nr_eff = static_cast<int>(ech.pivot_col.size());

    std::vector<bool> is_pivot(nc, false);
    for (int c : ech.pivot_col) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(nc, RatFun::zero(tab));
        v[fc] = RatFun::constant(tab, 1);
        // back-substitute pivot rows bottom-up
        for (int i = nr_eff - 1; i >= 0; --i) {
            int pc = ech.pivot_col[i];
            if (pc > fc) continue;
            RatFun acc = RatFun::zero(tab);
            for (int j = pc + 1; j < nc; ++j) {
                if (v[j].is_zero() || ech.rows[i][j].is_zero()) continue;
                acc += RatFun(ech.rows[i][j]) * v[j];
            }
            v[pc] = -acc / RatFun(ech.rows[i][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatFun det(const RatMat& a)
{
    const int n = static_cast<int>(a.size());
    if (n == 0 || static_cast<int>(a[0].size()) != n)
        throw std::invalid_argument("det: matrix not square");
    SymTab tab = mat_tab(a);
    // field Gaussian elimination tracking the product of pivots
    RatMat w = a;
    RatFun d = RatFun::constant(tab, 1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!w[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) return RatFun::zero(tab);
        if (piv != c) {
            std::swap(w[piv], w[c]);
            d = -d;
        }
        d *= w[c][c];
        RatFun inv = w[c][c].inv();
        for (int i = c + 1; i < n; ++i) {
            if (w[i][c].is_zero()) continue;
            RatFun f = w[i][c] * inv;
            for (int j = c; j < n; ++j) w[i][j] -= f * w[c][j];
        }
    }
    return d;
}

RatVec solve_linear(const RatMat& a, const RatVec& b)
{
    const int n = static_cast<int>(a.size());
    if (n == 0 || static_cast<int>(a[0].size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear: shape mismatch");
    SymTab tab = mat_tab(a);
    RatMat w = a;
    RatVec rhs = b;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!w[i][c].is_zero()) {
                if (piv < 0 || w[i][c].num().terms().size() + w[i][c].den().terms().size() <
                                   w[piv][c].num().terms().size() + w[piv][c].den().terms().size())
                    piv = i;
            }
        if (piv < 0) throw std::domain_error("solve_linear: singular matrix");
        std::swap(w[piv], w[c]);
        std::swap(rhs[piv], rhs[c]);
        RatFun inv = w[c][c].inv();
        for (int j = c; j < n; ++j) w[c][j] *= inv;
        rhs[c] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || w[i][c].is_zero()) continue;
            RatFun f = w[i][c];
            for (int j = c; j < n; ++j) w[i][j] -= f * w[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    return rhs;
}

} // namespace walg
