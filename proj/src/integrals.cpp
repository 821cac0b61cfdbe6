#include "unint/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include <nlohmann/json.hpp>

#include "unint/errors.hpp"

namespace unint {

long IntegralSpec::conj_degree() const {
    long d = 0;
    for (const auto& f : conj) d += f.mult;
    return d;
}

long IntegralSpec::plain_degree() const {
    long d = 0;
    for (const auto& f : plain) d += f.mult;
    return d;
}

long IntegralSpec::max_index() const {
    long m = 0;
    for (const auto& list : {conj, plain})
        for (const auto& f : list) m = std::max({m, f.row, f.col});
    return m;
}

namespace {

void validate_factors(const IntegralSpec& spec) {
    for (const auto& list : {spec.conj, spec.plain})
        for (const auto& f : list)
            if (f.mult < 1) throw std::invalid_argument("factor multiplicity must be >= 1");
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view word) {
        skip_space();
        if (text.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }
    long integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected an integer", start);
        return std::stol(std::string(text.substr(start, pos - start)));
    }
    bool done() {
        skip_space();
        return pos == text.size();
    }
};

}  // namespace

IntegralSpec IntegralSpec::parse_text(std::string_view text) {
    IntegralSpec spec;
    Cursor cur{text};
    std::vector<Factor>* section = nullptr;
    bool saw_any = false;
    while (!cur.done()) {
        if (cur.eat_word("conj:")) {
            section = &spec.conj;
            saw_any = true;
        } else if (cur.eat_word("plain:")) {
            section = &spec.plain;
            saw_any = true;
        } else if (section == nullptr) {
            throw ParseError("expected 'conj:' or 'plain:'", cur.pos);
        }
        cur.skip_space();
        if (cur.done()) break;
        if (cur.eat(';')) continue;  // empty item
        // a section keyword may be immediately followed by the next keyword
        Cursor probe = cur;
        if (probe.eat_word("conj:") || probe.eat_word("plain:")) continue;
        Factor f;
        f.row = cur.integer();
        if (!cur.eat(',')) throw ParseError("expected ','", cur.pos);
        f.col = cur.integer();
        if (cur.eat(',')) {
            f.mult = cur.integer();
            if (f.mult < 1) throw ParseError("multiplicity must be >= 1", cur.pos);
        }
        section->push_back(f);
        if (!cur.done() && !cur.eat(';')) throw ParseError("expected ';'", cur.pos);
    }
    if (!saw_any) throw ParseError("empty integral", 0);
    return spec;
}

std::string IntegralSpec::to_text() const {
    std::string out;
    auto append = [&out](const char* name, const std::vector<Factor>& list) {
        if (list.empty()) return;
        if (!out.empty()) out += "; ";
        out += name;
        for (std::size_t i = 0; i < list.size(); ++i) {
            out += i ? "; " : " ";
            out += std::to_string(list[i].row) + "," + std::to_string(list[i].col);
            if (list[i].mult != 1) out += "," + std::to_string(list[i].mult);
        }
    };
    append("conj:", conj);
    append("plain:", plain);
    return out;
}

IntegralSpec IntegralSpec::from_json(const nlohmann::json& j) {
    IntegralSpec spec;
    auto read = [](const nlohmann::json& arr, std::vector<Factor>& out) {
        if (arr.is_null()) return;
        for (const auto& item : arr) {
            Factor f;
            f.row = item.at(0).get<long>();
            f.col = item.at(1).get<long>();
            if (item.size() > 2) f.mult = item.at(2).get<long>();
            if (f.mult < 1) throw std::invalid_argument("factor multiplicity must be >= 1");
            out.push_back(f);
        }
    };
    if (j.contains("conj")) read(j["conj"], spec.conj);
    if (j.contains("plain")) read(j["plain"], spec.plain);
    return spec;
}

nlohmann::json IntegralSpec::to_json() const {
    auto write = [](const std::vector<Factor>& list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : list) arr.push_back({f.row, f.col, f.mult});
        return arr;
    };
    return nlohmann::json{{"conj", write(conj)}, {"plain", write(plain)}};
}

std::string ZeroIntegral::describe() const {
    switch (reason) {
        case Reason::degree_mismatch:
            return "vanishes: conjugated and plain degrees differ";
        case Reason::row_mismatch:
            return "vanishes: row index multisets differ";
        case Reason::col_mismatch:
            return "vanishes: column index multisets differ";
    }
    return "vanishes";
}

IntegralSpec CanonicalIntegral::to_spec() const {
    IntegralSpec spec;
    for (int x = 0; x < degree; ++x)
        spec.conj.push_back({rows[static_cast<std::size_t>(x)], cols[static_cast<std::size_t>(x)], 1});
    for (int x = 0; x < degree; ++x)
        spec.plain.push_back(
            {rows[static_cast<std::size_t>(x)], exchanged_cols[static_cast<std::size_t>(x)], 1});
    return spec;
}

CanonicalResult canonicalize(const IntegralSpec& spec) {
    validate_factors(spec);
    std::vector<std::pair<long, long>> ce, pe;
    for (const auto& f : spec.conj)
        for (long i = 0; i < f.mult; ++i) ce.emplace_back(f.row, f.col);
    for (const auto& f : spec.plain)
        for (long i = 0; i < f.mult; ++i) pe.emplace_back(f.row, f.col);
    if (ce.size() != pe.size()) return ZeroIntegral{ZeroIntegral::Reason::degree_mismatch};
    int p = static_cast<int>(ce.size());

    // Normalize labels in first-occurrence order over the conjugated factors.
    std::map<long, int> row_id, col_id;
    std::vector<int> rows, cols;
    for (const auto& [r, c] : ce) {
        if (!row_id.count(r)) row_id.emplace(r, static_cast<int>(row_id.size()));
        if (!col_id.count(c)) col_id.emplace(c, static_cast<int>(col_id.size()));
        rows.push_back(row_id[r]);
        cols.push_back(col_id[c]);
    }
    {
        std::multiset<long> a, b;
        for (const auto& [r, c] : ce) a.insert(r);
        for (const auto& [r, c] : pe) b.insert(r);
        if (a != b) return ZeroIntegral{ZeroIntegral::Reason::row_mismatch};
        a.clear();
        b.clear();
        for (const auto& [r, c] : ce) a.insert(c);
        for (const auto& [r, c] : pe) b.insert(c);
        if (a != b) return ZeroIntegral{ZeroIntegral::Reason::col_mismatch};
    }

    // Align the plain factors so their row sequence matches I, then read off
    // the exchanged column sequence L and a permutation Q with J_Q = L.
    std::map<int, std::deque<int>> plain_cols_by_row;
    for (const auto& [r, c] : pe) plain_cols_by_row[row_id.at(r)].push_back(col_id.at(c));
    std::vector<int> exchanged_cols;
    for (int x = 0; x < p; ++x) {
        auto& bucket = plain_cols_by_row[rows[static_cast<std::size_t>(x)]];
        exchanged_cols.push_back(bucket.front());
        bucket.pop_front();
    }
    std::map<int, std::deque<int>> positions_by_col;
    for (int y = 0; y < p; ++y) positions_by_col[cols[static_cast<std::size_t>(y)]].push_back(y);
    std::vector<int> q_images(static_cast<std::size_t>(p));
    for (int x = 0; x < p; ++x) {
        auto& bucket = positions_by_col[exchanged_cols[static_cast<std::size_t>(x)]];
        q_images[static_cast<std::size_t>(x)] = bucket.front();
        bucket.pop_front();
    }

    CanonicalIntegral ci;
    ci.degree = p;
    ci.rows = std::move(rows);
    ci.cols = std::move(cols);
    ci.exchanged_cols = std::move(exchanged_cols);
    ci.exchange = Permutation(std::move(q_images));
    ci.row_group = young_subgroup(ci.rows);
    ci.col_group = young_subgroup(ci.cols);
    ci.exchanged_col_group = young_subgroup(ci.exchanged_cols);
    return ci;
}

BigInt ClassCounts::total() const {
    BigInt t(0);
    for (const auto& [c, count] : counts) t += count;
    return t;
}

namespace {

bool is_subgroup(const std::vector<Permutation>& small, const std::vector<Permutation>& big) {
    if (small.size() > big.size()) return false;
    std::set<Permutation> big_set(big.begin(), big.end());
    for (const auto& g : small)
        if (!big_set.count(g)) return false;
    return true;
}

}  // namespace

ClassCounts class_counts_with_exchange(const CanonicalIntegral& ci, const Permutation& q) {
    ClassCounts result;
    result.degree = ci.degree;
    for (const auto& c : partitions_of(ci.degree)) result.counts[c] = BigInt(0);

    const auto& gi = ci.row_group;
    const auto& gjq = ci.exchanged_col_group;
    // When one symmetry group contains the other, the double sum collapses:
    // T G_I = G_I for every T in G_JQ (and symmetrically), so a single loop
    // scaled by the other group's order suffices.
    if (is_subgroup(gjq, gi)) {
        BigInt scale(static_cast<long>(gjq.size()));
        for (const auto& r : gi) result.counts[q.compose(r).cycle_type()] += scale;
        return result;
    }
    if (is_subgroup(gi, gjq)) {
        BigInt scale(static_cast<long>(gi.size()));
        for (const auto& t : gjq) result.counts[q.compose(t).cycle_type()] += scale;
        return result;
    }
    if (static_cast<long long>(gi.size()) * static_cast<long long>(gjq.size()) > kWorkBudget)
        throw DegreeTooLarge("class count enumeration exceeds the work budget");
    for (const auto& t : gjq) {
        Permutation qt = q.compose(t);
        for (const auto& r : gi) result.counts[qt.compose(r).cycle_type()] += 1;
    }
    return result;
}

ClassCounts class_counts(const CanonicalIntegral& ci) {
    return class_counts_with_exchange(ci, ci.exchange);
}

RatFunc xi(const Partition& c) {
    static std::map<Partition, RatFunc> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(c);
        if (it != cache.end()) return it->second;
    }
    int p = c.weight();
    if (p > kDegreeCap) throw DegreeTooLarge("primitive integral beyond the degree cap");
    BigInt pfact = factorial(p);
    RatFunc total;
    for (const auto& f : partitions_of(p)) {
        long long chi = character(f, c);
        if (chi == 0) continue;
        BigInt d(static_cast<long>(dim_sp(f)));
        Rational coeff(d * d * static_cast<long>(chi), pfact * pfact);
        coeff.canonicalize();
        total += RatFunc(coeff) / dim_un(f);
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(c, total);
    return total;
}

RatFunc evaluate_gtm(const CanonicalIntegral& ci) {
    if (ci.degree == 0) return RatFunc(BigInt(1));
    ClassCounts counts = class_counts(ci);
    RatFunc total;
    for (const auto& [c, count] : counts.counts) {
        if (count == 0) continue;
        total += RatFunc(count) * xi(c);
    }
    return total;
}

RatFunc evaluate_gtm(const IntegralSpec& spec) {
    CanonicalResult result = canonicalize(spec);
    if (std::holds_alternative<ZeroIntegral>(result)) return RatFunc();
    return evaluate_gtm(std::get<CanonicalIntegral>(result));
}

std::string to_string(OrderlyClass c) {
    switch (c) {
        case OrderlyClass::Disjoint:
            return "Disjoint";
        case OrderlyClass::Nested:
            return "Nested";
        case OrderlyClass::NonOrderly:
            return "NonOrderly";
    }
    return "?";
}

OrderlyClass classify_orderly(const CanonicalIntegral& ci) {
    const auto& gi = ci.row_group;
    const auto& gjq = ci.exchanged_col_group;
    if (is_subgroup(gjq, gi) || is_subgroup(gi, gjq)) return OrderlyClass::Nested;
    // "Disjoint" asks for more than a trivial intersection (any two subgroups
    // share e): the groups must move disjoint sets of points, so that neither
    // constrains the other.
    auto moved = [](const std::vector<Permutation>& group) {
        std::set<int> pts;
        for (const auto& g : group)
            for (int x = 0; x < g.degree(); ++x)
                if (g(x) != x) pts.insert(x);
        return pts;
    };
    std::set<int> mi = moved(gi), mj = moved(gjq);
    for (int x : mi)
        if (mj.count(x)) return OrderlyClass::NonOrderly;
    return OrderlyClass::Disjoint;
}

std::vector<CanonicalIntegral> symmetry_transforms(const CanonicalIntegral& ci) {
    auto build = [&](const std::vector<int>& conj_rows, const std::vector<int>& conj_cols,
                     const std::vector<int>& plain_rows, const std::vector<int>& plain_cols) {
        IntegralSpec spec;
        for (int x = 0; x < ci.degree; ++x) {
            spec.conj.push_back({conj_rows[static_cast<std::size_t>(x)],
                                 conj_cols[static_cast<std::size_t>(x)], 1});
            spec.plain.push_back({plain_rows[static_cast<std::size_t>(x)],
                                  plain_cols[static_cast<std::size_t>(x)], 1});
        }
        return std::get<CanonicalIntegral>(canonicalize(spec));
    };
    std::vector<int> rows(ci.rows.begin(), ci.rows.end());
    std::vector<int> cols(ci.cols.begin(), ci.cols.end());
    std::vector<int> ex(ci.exchanged_cols.begin(), ci.exchanged_cols.end());
    std::vector<CanonicalIntegral> out;
    out.push_back(build(rows, ex, rows, cols));  // conjugate swap: Q -> Q^-1
    out.push_back(build(cols, rows, ex, rows));  // transpose: rows <-> columns
    out.push_back(build(ex, rows, cols, rows));  // both
    return out;
}

}  // namespace unint
