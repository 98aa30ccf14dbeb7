#include "walg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walg {

Poly Poly::constant(SymTab tab, const Rat& c)
{
    Poly p(std::move(tab));
    Rat cc = c;
    cc.canonicalize();
    if (cc != 0) p.terms_.emplace(Mono(p.nvars()), cc);
    return p;
}

Poly Poly::symbol(SymTab tab, int var)
{
    Poly p(std::move(tab));
    if (var < 0 || var >= p.nvars()) throw std::invalid_argument("Poly::symbol: bad index");
    Mono m(p.nvars());
    m.e[var] = 1;
    m.deg = 1;
    p.terms_.emplace(m, Rat(1));
    return p;
}

Poly Poly::symbol(SymTab tab, const std::string& name)
{
    int i = tab->index_of_checked(name);
    return symbol(std::move(tab), i);
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0);
}

Rat Poly::constant_value() const
{
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms_.begin()->second;
}

void Poly::check_tab(const Poly& o) const
{
    if (tab_ && o.tab_ && !tab_->same_as(*o.tab_))
        throw std::invalid_argument("Poly: symbol-table mismatch");
}

void Poly::add_term(const Mono& m, const Rat& c)
{
    Rat cc = c;
    cc.canonicalize();
    if (cc == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, cc);
    } else {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r(tab_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    check_tab(o);
    Poly r = *this;
    if (!r.tab_) r.tab_ = o.tab_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    check_tab(o);
    Poly r = *this;
    if (!r.tab_) r.tab_ = o.tab_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    check_tab(o);
    Poly r(tab_ ? tab_ : o.tab_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const int n = static_cast<int>(std::max(terms_.begin()->first.e.size(),
                                            o.terms_.begin()->first.e.size()));
    Mono m(n);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < n; ++i) m.e[i] = ma.e[i] + mb.e[i];
            m.deg = ma.deg + mb.deg;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const
{
    Poly r(tab_);
    Rat cc = c;
    cc.canonicalize();
    if (cc == 0) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * cc);
    return r;
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly Poly::pow(int n) const
{
    if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(tab_, 1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::exact_div(const Poly& d) const
{
    check_tab(d);
    if (d.is_zero()) throw std::domain_error("Poly::exact_div: division by zero");
    Poly rem = *this;
    Poly quot(tab_ ? tab_ : d.tab_);
    const Mono& dl = d.lead_mono();
    while (!rem.is_zero()) {
        const Mono& rl = rem.lead_mono();
        Mono q(rl.e.size());
        bool divisible = true;
        for (size_t i = 0; i < rl.e.size(); ++i) {
            if (rl.e[i] < dl.e[i]) { divisible = false; break; }
            q.e[i] = rl.e[i] - dl.e[i];
        }
        if (!divisible) throw std::domain_error("Poly::exact_div: not exact");
        q.deg = rl.deg - dl.deg;
        Rat qc = rem.lead_coeff() / d.lead_coeff();
        Poly qt(quot.tab_);
        qt.terms_.emplace(q, qc);
        quot.add_term(q, qc);
        rem -= qt * d;
    }
    return quot;
}

Poly Poly::derivative(int var) const
{
    Poly r(tab_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Mono d = m;
        Rat nc = c * static_cast<long>(d.e[var]);
        d.e[var] -= 1;
        d.deg -= 1;
        r.add_term(d, nc);
    }
    return r;
}

int Poly::degree_in(int var) const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
    return d;
}

std::map<int, Poly> Poly::coeffs_in(int var) const
{
    std::map<int, Poly> out;
    for (const auto& [m, c] : terms_) {
        int p = m.e[var];
        Mono rest = m;
        rest.deg -= p;
        rest.e[var] = 0;
        auto it = out.find(p);
        if (it == out.end()) it = out.emplace(p, Poly(tab_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Poly Poly::from_coeffs_in(SymTab tab, int var, const std::map<int, Poly>& c)
{
    Poly r(tab);
    for (const auto& [p, q] : c) {
        for (const auto& [m, cc] : q.terms()) {
            Mono mm = m;
            mm.e[var] += p;
            mm.deg += p;
            r.add_term(mm, cc);
        }
    }
    return r;
}

Poly Poly::subst(int var, const Rat& value) const
{
    Poly r(tab_);
    for (const auto& [m, c] : terms_) {
        int p = m.e[var];
        Rat cc = c;
        for (int i = 0; i < p; ++i) cc *= value;
        Mono mm = m;
        mm.deg -= p;
        mm.e[var] = 0;
        r.add_term(mm, cc);
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const
{
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < m.e.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double Poly::eval_double(const std::vector<double>& point) const
{
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (size_t i = 0; i < m.e.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Rat Poly::content() const
{
    if (terms_.empty()) return Rat(0);
    mpz_class g(0), l(1);
    for (const auto& [m, c] : terms_) {
        mpz_class num = c.get_num();
        mpz_class den = c.get_den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rat r(g, l);
    r.canonicalize();
    return r;
}

Poly Poly::primitive_normalized() const
{
    if (terms_.empty()) return *this;
    Rat c = content();
    if (lead_coeff() < 0) c = -c;
    Poly r(tab_);
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc / c);
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest grlex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat cc = c;
        if (first) {
            if (cc < 0) { os << "-"; cc = -cc; }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        bool unit = (cc == 1);
        bool printed = false;
        if (!unit || m.deg == 0) {
            os << cc.get_str();
            printed = true;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) os << "*";
            os << tab_->name(static_cast<int>(i));
            if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
            printed = true;
        }
    }
    return os.str();
}

namespace {

// pseudo-remainder of a by b in main variable var (coefficients recurse).
Poly prem(const Poly& a, const Poly& b, int var, SymTab tab)
{
    auto bc = b.coeffs_in(var);
    int db = bc.rbegin()->first;
    Poly blead = bc.rbegin()->second;
    Poly r = a;
    int dr = r.degree_in(var);
    while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
        auto rc = r.coeffs_in(var);
        Poly rlead = rc.rbegin()->second;
        Poly shift = Poly::symbol(tab, var).pow(dr - db);
        r = r * blead - b * (rlead * shift);
    }
    return r;
}

Poly content_in(const Poly& p, int var)
{
    auto c = p.coeffs_in(var);
    Poly g = Poly::zero(p.tab());
    for (const auto& [k, q] : c) g = poly_gcd(g, q);
    return g;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();
    SymTab tab = a.tab() ? a.tab() : b.tab();

    // main variable: a common one minimizing the larger degree
    int var = -1, best = INT32_MAX;
    for (int v = 0; v < (a.tab() ? a.tab()->size() : 0); ++v) {
        if (std::min(a.degree_in(v), b.degree_in(v)) < 1) continue;
        int d = std::max(a.degree_in(v), b.degree_in(v));
        if (d < best) { best = d; var = v; }
    }
    if (var < 0) return Poly::constant(tab, 1); // no common variable

    Poly ca = content_in(a, var);
    Poly cb = content_in(b, var);
    Poly pa = a.exact_div(ca);
    Poly pb = b.exact_div(cb);
    Poly cg = poly_gcd(ca, cb);

    // primitive PRS
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem(pa, pb, var, tab);
        if (!r.is_zero()) {
            Poly rc = content_in(r, var);
            r = r.exact_div(rc);
        }
        pa = pb;
        pb = r;
        if (!pb.is_zero() && pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    }
    return (cg * pa).primitive_normalized();
}

} // namespace walg
