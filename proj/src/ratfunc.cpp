#include "unint/ratfunc.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "unint/errors.hpp"

namespace unint {

RatFunc::RatFunc(const Rational& q)
    : num_(BigInt(q.get_num())), den_(BigInt(q.get_den())) {
    reduce();
}

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(BigInt(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!(g.is_constant() && g.coeff(0) == 1)) {
        num_ = Polynomial::divide_exact(num_, g);
        den_ = Polynomial::divide_exact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::from_factored(const Rational& constant,
                               const std::vector<std::pair<long, long>>& roots) {
    Polynomial num{BigInt(constant.get_num())};
    Polynomial den{BigInt(constant.get_den())};
    for (const auto& [offset, mult] : roots) {
        Polynomial factor = Polynomial::linear(BigInt(offset));
        for (long i = 0; i < mult; ++i) num *= factor;
        for (long i = 0; i < -mult; ++i) den *= factor;
    }
    return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFunc::evaluate_at(const BigInt& n0) const {
    BigInt d = den_.evaluate(n0);
    if (d == 0) throw PoleAtValue("denominator vanishes at n = " + n0.get_str());
    Rational q(num_.evaluate(n0), d);
    q.canonicalize();
    return q;
}

RatFunc factorial_ratio(long a, long b) {
    std::vector<std::pair<long, long>> roots;
    if (a >= b) {
        for (long j = b + 1; j <= a; ++j) roots.emplace_back(j, 1);
    } else {
        for (long j = a + 1; j <= b; ++j) roots.emplace_back(j, -1);
    }
    return RatFunc::from_factored(Rational(1), roots);
}

nlohmann::json RatFunc::to_json() const {
    auto coeffs = [](const Polynomial& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
        return arr;
    };
    return nlohmann::json{{"num", coeffs(num_)}, {"den", coeffs(den_)}};
}

RatFunc RatFunc::from_json(const nlohmann::json& j) {
    auto poly = [](const nlohmann::json& arr) {
        std::vector<BigInt> coeffs;
        for (const auto& c : arr) {
            if (c.is_string())
                coeffs.emplace_back(c.get<std::string>());
            else
                coeffs.emplace_back(static_cast<long>(c.get<long long>()));
        }
        return Polynomial(std::move(coeffs));
    };
    return RatFunc(poly(j.at("num")), poly(j.at("den")));
}

namespace {

struct Factored {
    BigInt constant;                 // positive integer content
    std::map<long, int> linear;      // offset a -> multiplicity of (n+a)
    std::map<long, int> quadratic;   // k -> multiplicity of (n^2-k^2)
    Polynomial rest;                 // non-factorable remainder (may be 1)
};

// Split off integer-rooted linear factors (n+a); pair (n-k)(n+k) into n^2-k^2.
Factored factor_over_integers(const Polynomial& p) {
    Factored f;
    f.constant = p.content();
    Polynomial rest = p.primitive_part();
    long bound = 4L * (p.degree() + 1);
    for (long a = -bound; a <= bound && rest.degree() > 0; ++a) {
        Polynomial factor = Polynomial::linear(BigInt(a));
        while (rest.degree() > 0 && rest.evaluate(BigInt(-a)) == 0) {
            rest = Polynomial::divide_exact(rest, factor);
            ++f.linear[a];
        }
    }
    for (auto& [a, m] : f.linear) {
        if (a >= 0) continue;
        auto it = f.linear.find(-a);
        if (it == f.linear.end()) continue;
        int paired = std::min(m, it->second);
        if (paired > 0) {
            f.quadratic[-a] += paired;
            m -= paired;
            it->second -= paired;
        }
    }
    if (rest.is_constant() && !rest.is_zero()) {
        f.constant *= rest.coeff(0);
        rest = Polynomial(BigInt(1));
    } else if (rest.leading() < 0) {
        f.constant = -f.constant;
        rest = -rest;
    }
    f.rest = rest;
    return f;
}

std::string power_suffix(int m, bool latex) {
    if (m == 1) return "";
    if (latex) return "^{" + std::to_string(m) + "}";
    return "^" + std::to_string(m);
}

int factor_count(const Factored& f) {
    int count = f.constant != 1 ? 1 : 0;
    for (const auto& [a, m] : f.linear)
        if (m > 0) ++count;
    for (const auto& [k, m] : f.quadratic)
        if (m > 0) ++count;
    if (!f.rest.is_constant()) ++count;
    return count;
}

std::string render_factored(const Factored& f, bool latex) {
    std::string out;
    bool lead_constant = f.constant != 1;
    if (lead_constant) out += f.constant.get_str();
    std::string body;
    auto emit_linear = [&](long a, int m) {
        if (m == 0) return;
        if (a == 0) {
            body += "n" + power_suffix(m, latex);
        } else {
            std::string inner = a > 0 ? "n+" + std::to_string(a) : "n-" + std::to_string(-a);
            body += (latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")") +
                    power_suffix(m, latex);
        }
    };
    // n first, then the paired quadratics, then leftover linear factors.
    if (auto it = f.linear.find(0); it != f.linear.end()) emit_linear(0, it->second);
    for (const auto& [k, m] : f.quadratic) {
        if (m == 0) continue;
        std::string inner = latex ? "n^{2}-" + std::to_string(k * k)
                                  : "n^2-" + std::to_string(k * k);
        body += (latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")") +
                power_suffix(m, latex);
    }
    for (const auto& [a, m] : f.linear)
        if (a != 0) emit_linear(a, m);
    if (!f.rest.is_constant()) {
        std::string inner = f.rest.to_string();
        body += latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
    }
    if (body.empty() && !lead_constant) return "1";
    return out + body;
}

}  // namespace

std::string RatFunc::to_string() const {
    if (is_zero()) return "0";
    Factored fn = factor_over_integers(num_);
    Factored fd = factor_over_integers(den_);
    bool negative = fn.constant < 0;
    if (negative) fn.constant = -fn.constant;
    std::string num_str = render_factored(fn, false);
    std::string out = negative ? "-" : "";
    if (den_.is_constant() && den_.coeff(0) == 1) return out + num_str;
    std::string den_str = render_factored(fd, false);
    // A lone factor such as "n^2", "(n+1)" or "12" needs no extra wrapping.
    if (factor_count(fd) > 1) den_str = "(" + den_str + ")";
    return out + num_str + "/" + den_str;
}

std::string RatFunc::to_latex() const {
    if (is_zero()) return "0";
    Factored fn = factor_over_integers(num_);
    Factored fd = factor_over_integers(den_);
    bool negative = fn.constant < 0;
    if (negative) fn.constant = -fn.constant;
    std::string sign = negative ? "-" : "";
    if (den_.is_constant() && den_.coeff(0) == 1) return sign + render_factored(fn, true);
    return sign + "\\frac{" + render_factored(fn, true) + "}{" + render_factored(fd, true) + "}";
}

}  // namespace unint
