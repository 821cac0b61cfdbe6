#include "unint/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace unint {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int part : parts_)
        if (part < 1) throw std::invalid_argument("partition parts must be positive");
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int img : images_) {
        if (img < 0 || img >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(img)])
            throw std::invalid_argument("images do not form a bijection");
        seen[static_cast<std::size_t>(img)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images_[static_cast<std::size_t>(x)] != x) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw DegreeMismatch("composing permutations of different degree");
    std::vector<int> images(images_.size());
    for (int x = 0; x < degree(); ++x)
        images[static_cast<std::size_t>(x)] = images_[static_cast<std::size_t>(rhs(x))];
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (int x = 0; x < degree(); ++x) images[static_cast<std::size_t>((*this)(x))] = x;
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int length = 0;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            ++length;
        }
        lengths.push_back(length);
    }
    return Partition(std::move(lengths));
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) {
            seen[static_cast<std::size_t>(start)] = true;
            continue;
        }
        out += "(";
        bool first = true;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            if (!first) out += " ";
            out += std::to_string(x + 1);
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (text.compare(i, 1, "e") == 0) {
        i += 1;
        skip_space();
        if (i != text.size()) throw ParseError("trailing input after identity", i);
        return identity(degree < 0 ? 0 : degree);
    }
    int max_point = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_space();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected a point", i);
            int point = std::stoi(text.substr(start, i - start));
            if (point < 1) throw ParseError("points are 1-based", start);
            max_point = std::max(max_point, point);
            cycle.push_back(point - 1);
        }
        cycles.push_back(std::move(cycle));
        skip_space();
    }
    int p = degree < 0 ? max_point : degree;
    if (max_point > p) throw ParseError("point exceeds the requested degree", 0);
    std::vector<int> images(static_cast<std::size_t>(p));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(p), false);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            int from = cycle[k];
            int to = cycle[(k + 1) % cycle.size()];
            if (used[static_cast<std::size_t>(from)])
                throw ParseError("point repeated across cycles", 0);
            used[static_cast<std::size_t>(from)] = true;
            images[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation(std::move(images));
}

BigInt class_size(const Partition& c) {
    std::map<int, int> mult;
    for (int part : c.parts()) ++mult[part];
    BigInt denom(1);
    for (const auto& [j, a] : mult) {
        BigInt jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(a));
        denom *= jp * factorial(a);
    }
    return factorial(c.weight()) / denom;
}

std::vector<Permutation> enumerate_sp(int p, int cap) {
    if (p < 0) throw std::invalid_argument("negative degree");
    if (p > cap) throw DegreeTooLarge("S_" + std::to_string(p) + " enumeration beyond cap");
    std::vector<Permutation> out;
    std::vector<int> images(static_cast<std::size_t>(p));
    std::iota(images.begin(), images.end(), 0);
    do {
        out.push_back(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

SpStream::SpStream(int p, int cap) : degree_(p), done_(false) {
    if (p < 0) throw std::invalid_argument("negative degree");
    if (p > cap) throw DegreeTooLarge("S_" + std::to_string(p) + " enumeration beyond cap");
    reset();
}

void SpStream::reset() {
    state_.resize(static_cast<std::size_t>(degree_));
    std::iota(state_.begin(), state_.end(), 0);
    done_ = false;
}

bool SpStream::next(Permutation& out) {
    if (done_) return false;
    out = Permutation(state_);
    done_ = !std::next_permutation(state_.begin(), state_.end());
    return true;
}

BigInt young_subgroup_order(const std::vector<int>& values) {
    std::map<int, int> mult;
    for (int v : values) ++mult[v];
    BigInt order(1);
    for (const auto& [v, m] : mult) order *= factorial(m);
    return order;
}

std::vector<Permutation> young_subgroup(const std::vector<int>& values) {
    BigInt order = young_subgroup_order(values);
    if (order > kWorkBudget)
        throw DegreeTooLarge("Young subgroup of order " + order.get_str() +
                             " exceeds the work budget");
    std::map<int, std::vector<int>> blocks;
    for (std::size_t i = 0; i < values.size(); ++i)
        blocks[values[i]].push_back(static_cast<int>(i));

    std::vector<Permutation> out;
    std::vector<int> images(values.size());
    std::iota(images.begin(), images.end(), 0);
    std::vector<const std::vector<int>*> positions;
    for (const auto& [v, pos] : blocks) positions.push_back(&pos);

    std::function<void(std::size_t)> fill = [&](std::size_t bi) {
        if (bi == positions.size()) {
            out.push_back(Permutation(images));
            return;
        }
        const std::vector<int>& pos = *positions[bi];
        std::vector<int> arrangement = pos;
        do {
            for (std::size_t k = 0; k < pos.size(); ++k)
                images[static_cast<std::size_t>(pos[k])] = arrangement[k];
            fill(bi + 1);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        for (int p : pos) images[static_cast<std::size_t>(p)] = p;
    };
    fill(0);
    return out;
}

std::vector<Partition> partitions_of(int p) {
    if (p < 0) throw std::invalid_argument("negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> fill = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            fill(remaining - part, part);
            current.pop_back();
        }
    };
    fill(p, p);
    return out;
}

}  // namespace unint
