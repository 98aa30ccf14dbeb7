#pragma once

#include <map>
#include <optional>
#include <string>

#include "walg/poly.hpp"

namespace walg {

/// Element of Q(symbols), kept reduced and canonical after every operation:
/// gcd(num, den) = 1 and den is integer-primitive with positive leading
/// coefficient under grlex, so structural equality is mathematical equality.
class RatFun {
public:
    RatFun() = default;
    RatFun(Poly num, Poly den);
    explicit RatFun(Poly num);

    static RatFun zero(SymTab tab) { return RatFun(Poly::zero(tab)); }
    static RatFun constant(SymTab tab, const Rat& c) { return RatFun(Poly::constant(tab, c)); }
    static RatFun symbol(SymTab tab, const std::string& name)
    {
        return RatFun(Poly::symbol(tab, name));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const SymTab& tab() const { return num_.tab(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    RatFun operator*(const Rat& c) const;
    RatFun operator+(const Rat& c) const;
    RatFun inv() const;
    RatFun pow(int n) const; // negative n allowed for nonzero values

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative(int var) const;
    RatFun derivative(const std::string& name) const;

    /// Substitute a subset of symbols by exact rationals (keeps the table).
    RatFun subst(const std::map<std::string, Rat>& values) const;
    /// Re-express on a supertable containing all symbols of the current one.
    RatFun lift(const SymTab& bigger) const;

    /// Exact evaluation; throws std::domain_error on a pole.
    Rat eval(const std::map<std::string, Rat>& point) const;
    double eval_double(const std::map<std::string, double>& point) const;

    std::string to_string() const;

private:
    void reduce();

    Poly num_, den_;
};

RatFun operator*(const Rat& c, const RatFun& f);

} // namespace walg
