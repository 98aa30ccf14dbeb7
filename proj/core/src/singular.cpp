#include "walg/singular.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace walg {

namespace {

std::vector<std::vector<int>> partitions(int n, int min_part)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= min_part; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace

std::vector<PBWWord> pbw_words_at_level(int ngens, int level, int min_part)
{
    std::vector<PBWWord> out;
    PBWWord cur;
    cur.parts.assign(ngens, {});
    std::function<void(int, int)> rec = [&](int gen, int rest) {
        if (gen == ngens) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int use = 0; use <= rest; ++use) {
            if (use == 0) {
                cur.parts[gen] = {};
                rec(gen + 1, rest);
                continue;
            }
            for (auto& p : partitions(use, min_part)) {
                cur.parts[gen] = p;
                rec(gen + 1, rest - use);
            }
        }
    };
    rec(0, level);
    std::sort(out.begin(), out.end());
    return out;
}

FockState descendant_state(const PBWWord& word, const std::vector<Current>& gens,
                           const Weight& alpha)
{
    FockState s{alpha};
    // ascending generator index = ascending spin; lowest spin applied first
    for (size_t j = 0; j < word.parts.size(); ++j) {
        const auto& part = word.parts[j];
        // stored descending; rightmost operator carries the largest mode
        for (int p : part) {
            if (gens[j].spin == 2) s = sugawara_mode(-p, s);
            else s = mode_action(gens[j], -p, s);
            if (s.is_zero()) return s;
        }
    }
    return s;
}

std::string pbw_to_string(const PBWWord& w, const std::vector<int>& spins)
{
    std::ostringstream os;
    bool any = false;
    for (int j = static_cast<int>(w.parts.size()) - 1; j >= 0; --j) {
        for (auto it = w.parts[j].rbegin(); it != w.parts[j].rend(); ++it) {
            if (any) os << "*";
            os << (spins[j] == 2 ? "L" : "W" + std::to_string(spins[j])) << "[-" << *it << "]";
            any = true;
        }
    }
    return any ? os.str() : "1";
}

std::vector<NullVector> find_null_vectors(const std::vector<Current>& gens,
                                          const Weight& alpha, int level)
{
    const auto& rs = alpha.rs();
    auto words = pbw_words_at_level(static_cast<int>(gens.size()), level);
    // columns = words, rows = Fock coordinates: null vectors combine words
    std::vector<RatVec> cols;
    for (const auto& w : words)
        cols.push_back(coords_at_level(descendant_state(w, gens, alpha), level));
    const size_t nrows = cols.empty() ? 0 : cols[0].size();
    RatMat m(nrows, RatVec(words.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) m[i][j] = cols[j][i];

    std::vector<NullVector> out;
    for (auto& v : nullspace(m)) {
        NullVector nv;
        nv.level = level;
        nv.alpha = alpha;
        for (size_t i = 0; i < words.size(); ++i)
            if (!v[i].is_zero()) nv.coeffs.emplace(words[i], v[i]);
        // normalize: pure top-generator single-mode word -> coefficient 1
        PBWWord pure;
        pure.parts.assign(gens.size(), {});
        pure.parts.back() = {level};
        auto it = nv.coeffs.find(pure);
        if (it != nv.coeffs.end()) {
            RatFun inv = it->second.inv();
            for (auto& [w, c] : nv.coeffs) c *= inv;
        }
        out.push_back(std::move(nv));
    }
    return out;
}

std::vector<NullVector> null_ideal(const std::vector<Current>& gens, const Weight& alpha,
                                   int max_level)
{
    const auto& rs = alpha.rs();
    const auto& tab = rs->tab();
    const int top = static_cast<int>(gens.size()) - 1;
    std::vector<NullVector> out;

    for (int n = 1; n <= max_level; ++n) {
        // words: pure Virasoro partitions, plus the single top-generator mode
        std::vector<PBWWord> words;
        for (auto& p : partitions(n, 1)) {
            PBWWord w;
            w.parts.assign(gens.size(), {});
            w.parts[0] = p;
            words.push_back(std::move(w));
        }
        PBWWord pure;
        pure.parts.assign(gens.size(), {});
        pure.parts[top] = {n};
        words.push_back(pure);

        std::vector<RatVec> cols;
        for (const auto& w : words)
            cols.push_back(coords_at_level(descendant_state(w, gens, alpha), n));
        const size_t nrows = cols.empty() ? 0 : cols[0].size();
        RatMat m(nrows, RatVec(words.size()));
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < nrows; ++i) m[i][j] = cols[j][i];
        auto null = nullspace(m);

        // keep solutions involving the top generator; reject ambiguity
        std::optional<NullVector> found;
        int with_top = 0;
        for (auto& v : null) {
            if (v.back().is_zero()) continue; // pure Virasoro relation, not ours
            ++with_top;
            NullVector nv;
            nv.level = n;
            nv.alpha = alpha;
            RatFun inv = v.back().inv();
            for (size_t i = 0; i < words.size(); ++i)
                if (!v[i].is_zero()) nv.coeffs.emplace(words[i], v[i] * inv);
            found = std::move(nv);
        }
        if (with_top > 1)
            throw std::domain_error("null_ideal: relation not unique at level " +
                                    std::to_string(n));
        if (found) out.push_back(std::move(*found));
    }
    return out;
}

namespace {

// exact square root of a polynomial; nullopt when not a perfect square
std::optional<Poly> poly_sqrt(const Poly& d)
{
    if (d.is_zero()) return d;
    // leading coefficient must be a rational square
    auto rat_sqrt = [](const Rat& r) -> std::optional<Rat> {
        if (r < 0) return std::nullopt;
        mpz_class sn, sd, rem;
        mpz_sqrtrem(sn.get_mpz_t(), rem.get_mpz_t(), mpz_class(r.get_num()).get_mpz_t());
        if (rem != 0) return std::nullopt;
        mpz_sqrtrem(sd.get_mpz_t(), rem.get_mpz_t(), mpz_class(r.get_den()).get_mpz_t());
        if (rem != 0) return std::nullopt;
        return Rat(sn, sd);
    };
    const Mono& lm = d.lead_mono();
    auto lc = rat_sqrt(d.lead_coeff());
    if (!lc) return std::nullopt;
    Mono half(lm.e.size());
    for (size_t i = 0; i < lm.e.size(); ++i) {
        if (lm.e[i] % 2) return std::nullopt;
        half.e[i] = lm.e[i] / 2;
    }
    half.deg = lm.deg / 2;
    Poly s = Poly::zero(d.tab());
    s.add_term(half, *lc);
    Poly slead = s;
    for (int guard = 0; guard < 4096; ++guard) {
        Poly r = d - s * s;
        if (r.is_zero()) return s;
        // next correction t = lead(r) / (2 * slead)
        Poly lt = Poly::zero(d.tab());
        lt.add_term(r.lead_mono(), r.lead_coeff());
        Poly t;
        try {
            t = lt.exact_div(slead * Rat(2));
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        if (MonoGrlexLess{}(s.lead_mono(), t.lead_mono())) return std::nullopt;
        s += t;
    }
    return std::nullopt;
}

} // namespace

std::vector<VirasoroDegenerate> virasoro_level2_null(const RootSystemPtr& rs)
{
    if (rs->rank() != 1)
        throw std::invalid_argument("virasoro_level2_null: rank-1 system required");
    const auto& tab = rs->tab();
    int kvar = tab->index_of("k");
    if (kvar < 0)
        throw std::invalid_argument("virasoro_level2_null: symbol table must contain k");
    RatFun kappa = RatFun::symbol(tab, "k");
    Weight alpha = rs->fundamental_weight(0) * kappa;

    std::vector<Current> gens = {sugawara_current(rs)};
    auto words = pbw_words_at_level(1, 2);
    RatMat m;
    for (const auto& w : words)
        m.push_back(coords_at_level(descendant_state(w, gens, alpha), 2));
    RatFun d = det(m);

    // roots in k: strip k-powers (vacuum consequence), then solve the quadratic
    Poly num = d.num();
    auto ck = num.coeffs_in(kvar);
    while (!ck.empty() && ck.begin()->first > 0) {
        std::map<int, Poly> shifted;
        for (auto& [p, q] : ck) shifted.emplace(p - 1, q);
        ck = std::move(shifted);
    }
    // reassemble min-degree-shifted polynomial and view as quadratic in k
    int deg = ck.empty() ? -1 : ck.rbegin()->first;
    if (deg != 2)
        throw std::domain_error("virasoro_level2_null: expected quadratic determinant in k");
    Poly zero = Poly::zero(num.tab());
    auto get = [&](int p) { return ck.count(p) ? ck.at(p) : zero; };
    RatFun a{get(2)}, b{get(1)}, c{get(0)};
    RatFun disc = b * b - RatFun::constant(tab, 4) * a * c;
    if (!disc.den().is_constant())
        throw std::domain_error("virasoro_level2_null: discriminant not polynomial");
    auto sq = poly_sqrt(disc.num());
    auto dsq = poly_sqrt(disc.den());
    if (!sq || !dsq)
        throw std::domain_error("virasoro_level2_null: discriminant not a rational square");
    RatFun s = RatFun(*sq) / RatFun(*dsq);

    std::vector<VirasoroDegenerate> out;
    for (int sign : {+1, -1}) {
        RatFun root = (-b + s * Rat(sign)) / (a * Rat(2));
        // build the specialized null vector at this kappa
        Weight aw = rs->fundamental_weight(0) * root;
        auto nulls = find_null_vectors(gens, aw, 2);
        for (auto& nv : nulls) {
            // keep only genuine level-2 relations (L_{-2} coefficient nonzero)
            PBWWord l2;
            l2.parts = {{2}};
            if (!nv.coeffs.count(l2)) continue;
            // normalize so L_{-1}^2 has coefficient 1
            PBWWord l11;
            l11.parts = {{1, 1}};
            auto it = nv.coeffs.find(l11);
            if (it != nv.coeffs.end()) {
                RatFun inv = it->second.inv();
                for (auto& [w, cc] : nv.coeffs) cc *= inv;
            }
            out.push_back(VirasoroDegenerate{root, nv});
        }
    }
    return out;
}

} // namespace walg
