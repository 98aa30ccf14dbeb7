#include "walg/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace walg {

FockState::FockState(Weight alpha) : alpha_(std::move(alpha))
{
    terms_.emplace(CreationMono{}, RatFun::constant(alpha_.rs()->tab(), 1));
}

FockState::FockState(Weight alpha, std::map<CreationMono, RatFun> terms)
    : alpha_(std::move(alpha)), terms_(std::move(terms))
{
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

int FockState::level() const
{
    int l = -1;
    for (const auto& [m, c] : terms_) l = std::max(l, m.level());
    return l;
}

bool FockState::is_homogeneous(int* level_out) const
{
    int l = -1;
    for (const auto& [m, c] : terms_) {
        if (l < 0) l = m.level();
        else if (l != m.level()) return false;
    }
    if (level_out) *level_out = l;
    return true;
}

void FockState::add_term(const CreationMono& m, const RatFun& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFun FockState::coeff(const CreationMono& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFun::zero(tab()) : it->second;
}

FockState FockState::operator+(const FockState& o) const
{
    if (!(alpha_ == o.alpha_))
        throw std::invalid_argument("FockState: adding states of different modules");
    FockState r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

FockState FockState::operator-(const FockState& o) const { return *this + (-o); }

FockState FockState::operator-() const
{
    FockState r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

FockState FockState::operator*(const RatFun& c) const
{
    if (c.is_zero()) return zero(alpha_);
    FockState r = *this;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
}

FockState FockState::operator*(const Rat& c) const
{
    return *this * RatFun::constant(tab(), c);
}

bool FockState::operator==(const FockState& o) const
{
    return alpha_ == o.alpha_ && terms_ == o.terms_;
}

std::string mono_to_string(const CreationMono& m)
{
    if (m.modes.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < m.modes.size(); ++i) {
        if (i) os << "*";
        os << "a[" << m.modes[i].n << "," << m.modes[i].dir + 1 << "]";
    }
    return os.str();
}

std::string FockState::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << mono_to_string(m);
    }
    return os.str();
}

FockState apply_mode(Mode m, const FockState& s)
{
    const auto& rs = *s.weight().rs();
    const auto& tab = rs.tab();
    FockState out = FockState::zero(s.weight());

    if (m.n < 0) {
        for (const auto& [mono, c] : s.terms()) {
            CreationMono mm = mono;
            mm.modes.insert(std::upper_bound(mm.modes.begin(), mm.modes.end(), m), m);
            out.add_term(mm, c);
        }
        return out;
    }

    if (m.n == 0) {
        // <e_dir, a_0> |alpha> = -(1/2) <e_dir, alpha> |alpha>, commutes with creators
        RatFun scal = RatFun::zero(tab);
        for (int j = 0; j < rs.rank(); ++j) {
            if (rs.gram()[m.dir][j] == 0 || s.weight().coord(j).is_zero()) continue;
            scal += s.weight().coord(j) * rs.gram()[m.dir][j];
        }
        scal = scal * Rat(-1, 2);
        for (const auto& [mono, c] : s.terms()) out.add_term(mono, c * scal);
        return out;
    }

    // annihilator: contract against matching creators, [a_n, a_{-n}] = -(n/2) G
    for (const auto& [mono, c] : s.terms()) {
        for (size_t k = 0; k < mono.modes.size(); ++k) {
            const Mode& mk = mono.modes[k];
            if (mk.n != -m.n) continue;
            Rat g = rs.gram()[m.dir][mk.dir];
            if (g == 0) continue;
            CreationMono rest;
            rest.modes.reserve(mono.modes.size() - 1);
            for (size_t j = 0; j < mono.modes.size(); ++j)
                if (j != k) rest.modes.push_back(mono.modes[j]);
            Rat hook(-m.n, 2);
            hook.canonicalize();
            out.add_term(rest, c * (g * hook));
        }
    }
    return out;
}

FockState apply_mode_vec(int n, const Weight& u, const FockState& s)
{
    FockState out = FockState::zero(s.weight());
    for (int d = 0; d < u.rs()->rank(); ++d) {
        if (u.coord(d).is_zero()) continue;
        out = out + apply_mode({n, d}, s) * u.coord(d);
    }
    return out;
}

std::vector<CreationMono> basis_at_level(int rank, int n)
{
    std::vector<CreationMono> out;
    CreationMono cur;
    // modes sorted ascending: generate with the Mode< order, nondecreasing
    std::function<void(int, Mode)> rec = [&](int remaining, Mode minmode) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = -remaining; k <= -1; ++k) {
            for (int d = 0; d < rank; ++d) {
                Mode m{k, d};
                if (m < minmode) continue;
                cur.modes.push_back(m);
                rec(remaining + k, m);
                cur.modes.pop_back();
            }
        }
    };
    rec(n, Mode{-n - 1, 0});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RatFun> coords_at_level(const FockState& s, int n)
{
    const int rank = s.weight().rs()->rank();
    auto basis = basis_at_level(rank, n);
    std::vector<RatFun> c;
    c.reserve(basis.size());
    for (const auto& b : basis) c.push_back(s.coeff(b));
    return c;
}

FockState state_from_coords(const Weight& alpha, int n, const std::vector<RatFun>& c)
{
    auto basis = basis_at_level(alpha.rs()->rank(), n);
    if (basis.size() != c.size())
        throw std::invalid_argument("state_from_coords: coordinate count mismatch");
    FockState s = FockState::zero(alpha);
    for (size_t i = 0; i < basis.size(); ++i) s.add_term(basis[i], c[i]);
    return s;
}

} // namespace walg
