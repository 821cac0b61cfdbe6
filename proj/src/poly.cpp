#include "unint/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "unint/errors.hpp"

namespace unint {

namespace {
const BigInt kZero(0);
}

Polynomial::Polynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

Polynomial Polynomial::variable() { return linear(BigInt(0)); }

Polynomial Polynomial::linear(const BigInt& offset) {
    return Polynomial(std::vector<BigInt>{offset, BigInt(1)});
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& Polynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const BigInt& k, const Polynomial& a) {
    if (k == 0) return Polynomial();
    Polynomial r = a;
    for (auto& c : r.coeffs_) c *= k;
    return r;
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigInt Polynomial::content() const {
    BigInt g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return Polynomial();
    BigInt g = content();
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return Polynomial();
    if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<BigInt> rem = a.coeffs_;
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const auto& bl = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt top = rem[static_cast<std::size_t>(k + b.degree())];
        if (top == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), bl.get_mpz_t());
        if (r != 0) throw std::logic_error("inexact polynomial division");
        quot[static_cast<std::size_t>(k)] = q;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs_[static_cast<std::size_t>(i)];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return Polynomial(std::move(quot));
}

namespace {

// Pseudo-remainder up to a constant factor; the caller re-extracts contents.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        BigInt la = a.leading();
        std::vector<BigInt> shifted(static_cast<std::size_t>(shift), BigInt(0));
        for (const auto& c : b.coeffs()) shifted.push_back(la * c);
        a = lb * a - Polynomial(std::move(shifted));
    }
    return a;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    if (a.is_zero() || b.is_zero()) {
        const Polynomial& nz = a.is_zero() ? b : a;
        Polynomial r = nz;
        if (r.leading() < 0) r = -r;
        return r;
    }
    BigInt content_gcd;
    mpz_gcd(content_gcd.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    Polynomial u = a.primitive_part();
    Polynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = pseudo_remainder(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.leading() < 0) u = -u;
    return content_gcd * u;
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        BigInt abs_c = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        if (k == 0 || abs_c != 1) out += abs_c.get_str();
        if (k >= 1) {
            out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace unint
