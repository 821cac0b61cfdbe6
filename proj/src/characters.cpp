#include "unint/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "unint/errors.hpp"

namespace unint {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::map<Key, long long>& memo() {
    static std::map<Key, long long> cache;
    return cache;
}

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

// Border-strip recursion on the beta-set b_i = f_i + (k - i). Removing a
// strip of length t replaces one beta number by b - t when b - t is free;
// the strip height is the number of beta numbers jumped over.
long long character_impl(const std::vector<int>& f, const std::vector<int>& c) {
    if (f.empty()) return 1;
    if (c.empty()) return 0;  // unreachable for matching weights
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        auto it = memo().find({f, c});
        if (it != memo().end()) return it->second;
    }
    int t = c.front();
    std::vector<int> rest(c.begin() + 1, c.end());
    int k = static_cast<int>(f.size());
    std::vector<int> beta(f.size());
    for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] + (k - 1 - i);

    long long total = 0;
    for (int i = 0; i < k; ++i) {
        int target = beta[static_cast<std::size_t>(i)] - t;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int j = i + 1; j < k; ++j)
            if (beta[static_cast<std::size_t>(j)] > target) ++height;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nf(nb.size());
        for (int j = 0; j < k; ++j) nf[static_cast<std::size_t>(j)] = nb[static_cast<std::size_t>(j)] - (k - 1 - j);
        while (!nf.empty() && nf.back() == 0) nf.pop_back();
        long long sub = character_impl(nf, rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    {
        std::lock_guard<std::mutex> lock(memo_mutex());
        memo().insert({{f, c}, total});
    }
    return total;
}

}  // namespace

long long character(const Partition& f, const Partition& c) {
    if (f.weight() != c.weight())
        throw WeightMismatch("signature and class have different weights");
    return character_impl(f.parts(), c.parts());
}

long long dim_sp(const Partition& f) {
    int p = f.weight();
    if (p == 0) return 1;
    Partition conj = f.conjugate();
    BigInt hooks(1);
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f[i]; ++j) {
            int hook = (f[i] - j) + (conj[j] - i) - 1;
            hooks *= hook;
        }
    BigInt dim = factorial(p) / hooks;
    return static_cast<long long>(dim.get_si());
}

RatFunc dim_un(const Partition& f) {
    if (f.empty()) return RatFunc(BigInt(1));
    Partition conj = f.conjugate();
    Polynomial num{BigInt(1)};
    BigInt hooks(1);
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f[i]; ++j) {
            num *= Polynomial::linear(BigInt(j - i));
            hooks *= (f[i] - j) + (conj[j] - i) - 1;
        }
    return RatFunc(std::move(num), Polynomial(hooks));
}

CharacterTable character_table(int p, int cap) {
    if (p > cap) throw DegreeTooLarge("character table beyond cap");
    if (p < 0) throw std::invalid_argument("negative degree");
    CharacterTable table;
    table.degree = p;
    table.rows = partitions_of(p);
    table.cols = table.rows;
    std::reverse(table.cols.begin(), table.cols.end());
    for (const auto& c : table.cols) table.class_sizes.push_back(class_size(c));
    for (const auto& f : table.rows) {
        std::vector<long long> row;
        for (const auto& c : table.cols) row.push_back(character(f, c));
        table.entries.push_back(std::move(row));
    }
    return table;
}

}  // namespace unint
