#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unint/bigint.hpp"

namespace unint {

/// Dense univariate polynomial in the symbolic dimension n, with
/// arbitrary-precision integer coefficients stored lowest power first.
/// The zero polynomial is the empty coefficient vector; otherwise the
/// highest-order coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(BigInt constant);
    explicit Polynomial(long constant) : Polynomial(BigInt(constant)) {}
    explicit Polynomial(std::vector<BigInt> coefficients);

    /// The monomial n.
    static Polynomial variable();
    /// The monomial n + offset.
    static Polynomial linear(const BigInt& offset);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of n^k (zero beyond the stored degree).
    const BigInt& coeff(int k) const;
    const BigInt& leading() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const BigInt& k, const Polynomial& a);
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    /// gcd of the coefficients, positive; 0 for the zero polynomial.
    BigInt content() const;
    /// *this divided by its content, with the leading coefficient's sign kept.
    Polynomial primitive_part() const;
    /// Polynomial gcd over Z (content included), positive leading coefficient.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);
    /// Exact quotient; throws DivisionByZero on zero divisor and
    /// std::logic_error if the division is not exact.
    static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

    std::string to_string(std::string_view var = "n") const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

}  // namespace unint
