#include "walg/ratfun.hpp"

#include <sstream>
#include <stdexcept>

namespace walg {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    reduce();
}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.tab(), 1)) {}

bool RatFun::is_one() const
{
    return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
           num_.constant_value() == den_.constant_value();
}

void RatFun::reduce()
{
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.tab() ? num_.tab() : den_.tab(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    // canonical scale: den integer-primitive, positive leading coefficient
    Rat c = den_.content();
    if (den_.lead_coeff() < 0) c = -c;
    if (c != 1) {
        den_ = den_ * (Rat(1) / c);
        num_ = num_ * (Rat(1) / c);
    }
}

RatFun RatFun::operator-() const
{
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly db = den_.exact_div(g);
    Poly ob = o.den_.exact_div(g);
    return RatFun(num_ * ob + o.num_ * db, den_ * ob);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const
{
    if (is_zero() || o.is_zero()) return zero(tab() ? tab() : o.tab());
    // cross-reduce before multiplying to keep intermediates small
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : num_.exact_div(g1);
    Poly d2 = g1.is_constant() ? o.den_ : o.den_.exact_div(g1);
    Poly n2 = g2.is_constant() ? o.num_ : o.num_.exact_div(g2);
    Poly d1 = g2.is_constant() ? den_ : den_.exact_div(g2);
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inv(); }

RatFun RatFun::operator*(const Rat& c) const
{
    if (c == 0) return zero(tab());
    RatFun r = *this;
    r.num_ = r.num_ * c;
    return r;
}

RatFun RatFun::operator+(const Rat& c) const { return *this + RatFun(Poly::constant(tab(), c)); }

RatFun operator*(const Rat& c, const RatFun& f) { return f * c; }

RatFun RatFun::inv() const
{
    if (is_zero()) throw std::domain_error("RatFun::inv: division by zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(int n) const
{
    if (n == 0) return constant(tab(), 1);
    RatFun base = n > 0 ? *this : inv();
    int k = n > 0 ? n : -n;
    RatFun r = constant(tab(), 1);
    while (k > 0) {
        if (k & 1) r *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

RatFun RatFun::derivative(int var) const
{
    // (n/d)' = (n'd - nd')/d^2
    Poly nd = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFun(std::move(nd), den_ * den_);
}

RatFun RatFun::derivative(const std::string& name) const
{
    return derivative(tab()->index_of_checked(name));
}

RatFun RatFun::subst(const std::map<std::string, Rat>& values) const
{
    Poly n = num_, d = den_;
    for (const auto& [name, v] : values) {
        int i = tab()->index_of_checked(name);
        n = n.subst(i, v);
        d = d.subst(i, v);
    }
    if (d.is_zero()) throw std::domain_error("RatFun::subst: pole at point");
    return RatFun(std::move(n), std::move(d));
}

RatFun RatFun::lift(const SymTab& bigger) const
{
    std::vector<int> remap(tab()->size());
    for (int i = 0; i < tab()->size(); ++i)
        remap[i] = bigger->index_of_checked(tab()->name(i));
    auto liftp = [&](const Poly& p) {
        Poly r(bigger);
        for (const auto& [m, c] : p.terms()) {
            Mono mm(bigger->size());
            mm.deg = m.deg;
            for (size_t i = 0; i < m.e.size(); ++i) mm.e[remap[i]] = m.e[i];
            r.add_term(mm, c);
        }
        return r;
    };
    RatFun r;
    r.num_ = liftp(num_);
    r.den_ = liftp(den_);
    return r;
}

Rat RatFun::eval(const std::map<std::string, Rat>& point) const
{
    std::vector<Rat> p(tab()->size(), Rat(0));
    for (int i = 0; i < tab()->size(); ++i) {
        auto it = point.find(tab()->name(i));
        if (it == point.end()) {
            if (num_.degree_in(i) > 0 || den_.degree_in(i) > 0)
                throw std::invalid_argument("RatFun::eval: missing value for " + tab()->name(i));
        } else {
            p[i] = it->second;
        }
    }
    Rat d = den_.eval(p);
    if (d == 0) throw std::domain_error("RatFun::eval: pole at point");
    return num_.eval(p) / d;
}

double RatFun::eval_double(const std::map<std::string, double>& point) const
{
    std::vector<double> p(tab()->size(), 0.0);
    for (int i = 0; i < tab()->size(); ++i) {
        auto it = point.find(tab()->name(i));
        if (it == point.end()) {
            if (num_.degree_in(i) > 0 || den_.degree_in(i) > 0)
                throw std::invalid_argument("RatFun::eval_double: missing value for " +
                                            tab()->name(i));
        } else {
            p[i] = it->second;
        }
    }
    double d = den_.eval_double(p);
    if (d == 0) throw std::domain_error("RatFun::eval_double: pole at point");
    return num_.eval_double(p) / d;
}

std::string RatFun::to_string() const
{
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::ostringstream os;
    bool np = num_.terms().size() > 1;
    bool dp = den_.terms().size() > 1;
    os << (np ? "(" : "") << num_.to_string() << (np ? ")" : "");
    os << "/";
    os << (dp ? "(" : "") << den_.to_string() << (dp ? ")" : "");
    return os.str();
}

} // namespace walg
