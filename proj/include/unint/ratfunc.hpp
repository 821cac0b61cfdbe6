#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unint/poly.hpp"

namespace unint {

/// Exact rational function in n. Canonical form: numerator and denominator
/// share no polynomial or integer factor, and the denominator has a positive
/// leading coefficient, so equal values compare equal field by field.
class RatFunc {
public:
    RatFunc() : num_(), den_(BigInt(1)) {}
    explicit RatFunc(BigInt constant) : num_(std::move(constant)), den_(BigInt(1)) {}
    explicit RatFunc(long constant) : RatFunc(BigInt(constant)) {}
    explicit RatFunc(const Rational& q);
    explicit RatFunc(Polynomial num) : num_(std::move(num)), den_(BigInt(1)) {}
    RatFunc(Polynomial num, Polynomial den);

    /// constant * prod (n + offset)^multiplicity, negative multiplicities
    /// landing in the denominator.
    static RatFunc from_factored(const Rational& constant,
                                 const std::vector<std::pair<long, long>>& roots);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws DivisionByZero when b is the zero function.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Exact value at integer n0; throws PoleAtValue where the denominator vanishes.
    Rational evaluate_at(const BigInt& n0) const;

    /// {"num": [...], "den": [...]} with decimal-string coefficients.
    nlohmann::json to_json() const;
    static RatFunc from_json(const nlohmann::json& j);

    /// Human-readable factored form, e.g. "-1/(n(n^2-1))".
    std::string to_string() const;
    std::string to_latex() const;

private:
    void reduce();

    Polynomial num_, den_;
};

/// (n+a)!/(n+b)! expanded as a finite product of linear factors.
RatFunc factorial_ratio(long a, long b);

}  // namespace unint
