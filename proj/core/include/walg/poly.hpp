#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "walg/symtab.hpp"

namespace walg {

using Rat = mpq_class;

/// Exponent vector under graded lexicographic order (table order breaks ties).
struct Mono {
    std::vector<uint16_t> e;
    int deg = 0;

    explicit Mono(int nvars = 0) : e(nvars, 0) {}

    bool operator==(const Mono& o) const { return e == o.e; }
};

struct MonoGrlexLess {
    bool operator()(const Mono& a, const Mono& b) const
    {
        if (a.deg != b.deg) return a.deg < b.deg;
        // lex on exponents, earlier symbols more significant
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, MonoGrlexLess>;

    Poly() = default;
    explicit Poly(SymTab tab) : tab_(std::move(tab)) {}

    static Poly zero(SymTab tab) { return Poly(std::move(tab)); }
    static Poly constant(SymTab tab, const Rat& c);
    static Poly symbol(SymTab tab, int var);
    static Poly symbol(SymTab tab, const std::string& name);

    const SymTab& tab() const { return tab_; }
    int nvars() const { return tab_ ? tab_->size() : 0; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    const TermMap& terms() const { return terms_; }
    int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg; }

    // leading term under grlex
    const Mono& lead_mono() const { return terms_.rbegin()->first; }
    const Rat& lead_coeff() const { return terms_.rbegin()->second; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& c) const;
    Poly& operator*=(const Rat& c) { return *this = *this * c; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int n) const;

    /// Exact division; throws std::domain_error when the division is not exact.
    Poly exact_div(const Poly& d) const;

    Poly derivative(int var) const;

    int degree_in(int var) const;
    /// View as univariate in `var`: power -> coefficient polynomial (var absent there).
    std::map<int, Poly> coeffs_in(int var) const;
    /// Reassemble from a coeffs_in-style map.
    static Poly from_coeffs_in(SymTab tab, int var, const std::map<int, Poly>& c);

    /// Substitute one variable by an exact rational.
    Poly subst(int var, const Rat& value) const;

    Rat eval(const std::vector<Rat>& point) const;
    double eval_double(const std::vector<double>& point) const;

    /// gcd of all coefficients (non-negative), as a rational: gcd(nums)/lcm(dens).
    Rat content() const;
    /// Multiply by a rational so coefficients are coprime integers and the
    /// grlex-leading coefficient is positive. Zero stays zero.
    Poly primitive_normalized() const;

    void add_term(const Mono& m, const Rat& c); // used by builders

    std::string to_string() const;

private:
    void check_tab(const Poly& o) const;

    SymTab tab_;
    TermMap terms_;
};

Poly operator*(const Rat& c, const Poly& p);

/// Polynomial gcd over Q[x1..xn], primitive-normalized. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace walg
