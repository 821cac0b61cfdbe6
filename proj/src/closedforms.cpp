#include "unint/closedforms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "unint/errors.hpp"

namespace unint {

RatFunc fan_integral(long m) {
    if (m < 0) throw std::invalid_argument("negative fan multiplicity");
    return RatFunc(Rational(factorial(m))) * factorial_ratio(-1, m - 1);
}

RatFunc z_integral(long m1, long m2, long m3) {
    if (m1 < 0 || m2 < 0 || m3 < 0) throw std::invalid_argument("negative multiplicity");
    RatFunc value(Rational(factorial(m1) * factorial(m2) * factorial(m3)));
    value *= factorial_ratio(-2, m1 - 2);
    value *= factorial_ratio(-1, m3 - 2);
    value *= factorial_ratio(m1 + m3 - 2, m1 + m2 + m3 - 1);
    return value;
}

RatFunc stack_integral(const std::vector<long>& multiplicities) {
    long weight = 0;
    for (long p : multiplicities) {
        if (p < 1) throw std::invalid_argument("stack multiplicities must be >= 1");
        weight += p;
    }
    if (weight > kDegreeCap) throw DegreeTooLarge("stack weight beyond the degree cap");
    // N[c] vanishes unless c is a concatenation of one class per block, in
    // which case it is prod p_i! n_i(c_i); collect the counts per merged
    // class first, then sum N[c] xi[c].
    std::map<Partition, BigInt> counts;
    std::vector<int> merged;
    std::function<void(std::size_t, const BigInt&)> recurse = [&](std::size_t i,
                                                                 const BigInt& coeff) {
        if (i == multiplicities.size()) {
            counts[Partition(merged)] += coeff;
            return;
        }
        for (const auto& c : partitions_of(static_cast<int>(multiplicities[i]))) {
            std::size_t before = merged.size();
            merged.insert(merged.end(), c.parts().begin(), c.parts().end());
            recurse(i + 1, coeff * factorial(multiplicities[i]) * class_size(c));
            merged.resize(before);
        }
    };
    recurse(0, BigInt(1));
    RatFunc total;
    for (const auto& [c, count] : counts) total += RatFunc(count) * xi(c);
    return total;
}

RatFunc special_double_fan(long alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    if (2 * alpha > kDegreeCap) throw DegreeTooLarge("double fan beyond the degree cap");
    // Products Q R run over the permutations interchanging the two blocks of
    // left-dot labels, whose cycles all have even length 2i; a structure with
    // k_i cycles of length 2i occurs (alpha!)^2 / prod i^{k_i} k_i! times.
    BigInt afact2 = factorial(alpha) * factorial(alpha);
    RatFunc total;
    for (const auto& halves : partitions_of(static_cast<int>(alpha))) {
        std::map<int, int> k;
        std::vector<int> cycle_lengths;
        for (int i : halves.parts()) {
            ++k[i];
            cycle_lengths.push_back(2 * i);
        }
        BigInt denom(1);
        for (const auto& [i, ki] : k) {
            BigInt ip;
            mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i),
                          static_cast<unsigned long>(ki));
            denom *= ip * factorial(ki);
        }
        total += RatFunc(Rational(afact2, denom)) * xi(Partition(cycle_lengths));
    }
    return total;
}

std::vector<std::pair<BigInt, OpenedMonomial>> double_fan_expand(const DoubleFanClosed& closed) {
    if (closed.m_a < 0 || closed.n_a < 0 || closed.m_b < 0 || closed.n_b < 0)
        throw InvalidClosedGraph("negative line count");
    if (closed.m_a + closed.m_b != closed.n_a + closed.n_b)
        throw InvalidClosedGraph("solid and dotted line counts differ; the integral vanishes");
    BigInt numerator = factorial(closed.m_a) * factorial(closed.n_a) * factorial(closed.m_b) *
                       factorial(closed.n_b);
    std::vector<std::pair<BigInt, OpenedMonomial>> terms;
    for (long alpha_a = 0; alpha_a <= closed.m_a; ++alpha_a) {
        OpenedMonomial m;
        m.alpha_a = alpha_a;
        m.beta_a = closed.m_a - alpha_a;
        m.alpha_b = closed.n_a - m.beta_a;
        m.beta_b = closed.n_b - alpha_a;
        if (m.alpha_b < 0 || m.beta_b < 0) continue;
        if (m.alpha_b + m.beta_b != closed.m_b) continue;
        BigInt v = numerator / (factorial(m.alpha_a) * factorial(m.alpha_b) *
                                factorial(m.beta_a) * factorial(m.beta_b));
        terms.emplace_back(v, m);
    }
    return terms;
}

namespace {

RatFunc special_double_fan_or_one(long alpha) {
    if (alpha == 0) return RatFunc(BigInt(1));
    return special_double_fan(alpha);
}

}  // namespace

RatFunc reduce_opened(const OpenedMonomial& mono) {
    if (mono.alpha_a < 0 || mono.alpha_b < 0 || mono.beta_a < 0 || mono.beta_b < 0)
        throw std::invalid_argument("negative pattern exponent");
    if (mono.alpha_a != mono.alpha_b) return RatFunc();  // row multisets differ
    long alpha = mono.alpha_a;
    long beta_a = mono.beta_a, beta_b = mono.beta_b;
    // The unitarity-sum recursion eliminates the shorter [B] tail.
    if (beta_b > beta_a) std::swap(beta_a, beta_b);
    RatFunc total;
    for (long e = 0; e <= beta_b; ++e) {
        BigInt count = factorial(e) * binomial(beta_a, e) * binomial(beta_b, e);
        if (e % 2 != 0) count = -count;
        RatFunc coeff = RatFunc(count);
        coeff *= RatFunc(Polynomial::linear(BigInt(2 * alpha - 1 + 2 * e)));
        coeff *= factorial_ratio(2 * alpha - 2 + e, 2 * alpha + beta_a - 1 + e);
        coeff *= factorial_ratio(2 * alpha - 1 + 2 * e, 2 * alpha + beta_b - 1 + e);
        total += coeff * special_double_fan_or_one(alpha + e);
    }
    return total;
}

RatFunc double_fan_value(const std::vector<DoubleFanClosed>& branches) {
    std::map<OpenedMonomial, BigInt> opened{{OpenedMonomial{}, BigInt(1)}};
    for (const auto& branch : branches) {
        auto terms = double_fan_expand(branch);
        std::map<OpenedMonomial, BigInt> next;
        for (const auto& [mono, coeff] : opened)
            for (const auto& [v, t] : terms) {
                OpenedMonomial merged{mono.alpha_a + t.alpha_a, mono.alpha_b + t.alpha_b,
                                      mono.beta_a + t.beta_a, mono.beta_b + t.beta_b};
                next[merged] += coeff * v;
            }
        opened = std::move(next);
    }
    RatFunc total;
    for (const auto& [mono, coeff] : opened) total += RatFunc(coeff) * reduce_opened(mono);
    return total;
}

// ---------------------------------------------------------------------------
// Expression grammar
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) words.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

long parse_count(const std::string& word, std::size_t at) {
    try {
        std::size_t used = 0;
        long value = std::stol(word, &used);
        if (used != word.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + word + "'", at);
    }
}

DoubleFanClosed branch_from_patterns(std::string_view body, std::size_t at) {
    OpenedMonomial counts;
    std::size_t i = 0;
    while (i < body.size()) {
        long count = 1;
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (i > start) count = std::stol(std::string(body.substr(start, i - start)));
        if (i + 1 >= body.size()) throw ParseError("expected a pattern like Aa", at + i);
        char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(body[i])));
        char dot = static_cast<char>(std::tolower(static_cast<unsigned char>(body[i + 1])));
        i += 2;
        if (kind == 'A' && dot == 'a')
            counts.alpha_a += count;
        else if (kind == 'A' && dot == 'b')
            counts.alpha_b += count;
        else if (kind == 'B' && dot == 'a')
            counts.beta_a += count;
        else if (kind == 'B' && dot == 'b')
            counts.beta_b += count;
        else
            throw ParseError("unknown pattern; use Aa, Ab, Ba or Bb", at + i - 2);
        if (i < body.size()) {
            if (body[i] != '+') throw ParseError("expected '+'", at + i);
            ++i;
            if (i == body.size()) throw ParseError("dangling '+'", at + i);
        }
    }
    DoubleFanClosed closed;
    closed.m_a = counts.alpha_a + counts.beta_a;
    closed.n_a = counts.alpha_b + counts.beta_a;
    closed.m_b = counts.alpha_b + counts.beta_b;
    closed.n_b = counts.alpha_a + counts.beta_b;
    return closed;
}

}  // namespace

ClosedExpr parse_closed_expr(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty expression", 0);
    if (text[first] == '[') {
        DoubleFanExpr expr;
        std::size_t i = first;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            if (text[i] != '[') throw ParseError("expected '['", i);
            std::size_t close = text.find(']', i);
            if (close == std::string_view::npos) throw ParseError("missing ']'", i);
            std::string body(text.substr(i + 1, close - i - 1));
            body.erase(std::remove_if(body.begin(), body.end(),
                                      [](unsigned char c) { return std::isspace(c); }),
                       body.end());
            if (body.empty()) throw ParseError("empty branch", i);
            expr.branches.push_back(branch_from_patterns(body, i + 1));
            i = close + 1;
        }
        if (expr.branches.empty()) throw ParseError("no branches", 0);
        return expr;
    }
    auto words = split_words(text);
    const std::string& head = words.front();
    if (head == "fan") {
        if (words.size() != 2) throw ParseError("usage: fan m", 0);
        return FanExpr{parse_count(words[1], 0)};
    }
    if (head == "z") {
        if (words.size() != 4) throw ParseError("usage: z m1 m2 m3", 0);
        return ZExpr{parse_count(words[1], 0), parse_count(words[2], 0), parse_count(words[3], 0)};
    }
    if (head == "stack") {
        if (words.size() < 2) throw ParseError("usage: stack p1 p2 ...", 0);
        StackExpr expr;
        for (std::size_t i = 1; i < words.size(); ++i) expr.parts.push_back(parse_count(words[i], 0));
        return expr;
    }
    throw ParseError("unknown closed form '" + head + "'", first);
}

RatFunc evaluate_closed_expr(const ClosedExpr& expr) {
    return std::visit(
        [](const auto& e) -> RatFunc {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, FanExpr>) return fan_integral(e.m);
            if constexpr (std::is_same_v<T, ZExpr>) return z_integral(e.m1, e.m2, e.m3);
            if constexpr (std::is_same_v<T, StackExpr>) return stack_integral(e.parts);
            if constexpr (std::is_same_v<T, DoubleFanExpr>) return double_fan_value(e.branches);
        },
        expr);
}

IntegralSpec spec_for_fan(long m) { return spec_for_opened_fan({m}); }

IntegralSpec spec_for_opened_fan(const std::vector<long>& multiplicities) {
    IntegralSpec spec;
    long col = 1;
    for (long m : multiplicities) {
        if (m < 0) throw std::invalid_argument("negative fan multiplicity");
        if (m == 0) continue;
        spec.conj.push_back({1, col, m});
        spec.plain.push_back({1, col, m});
        ++col;
    }
    return spec;
}

IntegralSpec spec_for_z(long m1, long m2, long m3) {
    IntegralSpec spec;
    auto add = [&spec](long row, long col, long mult) {
        if (mult == 0) return;
        spec.conj.push_back({row, col, mult});
        spec.plain.push_back({row, col, mult});
    };
    add(1, 1, m1);
    add(1, 2, m2);
    add(2, 2, m3);
    return spec;
}

IntegralSpec spec_for_stack(const std::vector<long>& multiplicities) {
    IntegralSpec spec;
    long label = 1;
    for (long p : multiplicities) {
        spec.conj.push_back({label, label, p});
        spec.plain.push_back({label, label, p});
        ++label;
    }
    return spec;
}

IntegralSpec spec_for_branches(const std::vector<DoubleFanClosed>& branches) {
    IntegralSpec spec;
    long col = 1;  // column labels are independent of the two row labels
    auto add = [&spec](std::vector<Factor>& side, long row, long col_label, long mult) {
        if (mult > 0) side.push_back({row, col_label, mult});
    };
    for (const auto& branch : branches) {
        add(spec.conj, 1, col, branch.m_a);
        add(spec.conj, 2, col, branch.m_b);
        add(spec.plain, 1, col, branch.n_a);
        add(spec.plain, 2, col, branch.n_b);
        ++col;
    }
    return spec;
}

IntegralSpec spec_for_closed_expr(const ClosedExpr& expr) {
    return std::visit(
        [](const auto& e) -> IntegralSpec {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, FanExpr>) return spec_for_fan(e.m);
            if constexpr (std::is_same_v<T, ZExpr>) return spec_for_z(e.m1, e.m2, e.m3);
            if constexpr (std::is_same_v<T, StackExpr>) return spec_for_stack(e.parts);
            if constexpr (std::is_same_v<T, DoubleFanExpr>) return spec_for_branches(e.branches);
        },
        expr);
}

IntegralSpec spec_for_primitive(const Partition& c) {
    IntegralSpec spec;
    int point = 0;
    for (int len : c.parts()) {
        // one cycle: point -> point+1 -> ... -> point+len-1 -> point
        for (int k = 0; k < len; ++k) {
            long x = point + k + 1;
            long image = point + (k + 1) % len + 1;
            spec.conj.push_back({x, x, 1});
            spec.plain.push_back({x, image, 1});
        }
        point += len;
    }
    return spec;
}

}  // namespace unint
