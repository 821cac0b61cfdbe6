#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "unint/bigint.hpp"
#include "unint/errors.hpp"

namespace unint {

/// Full-group enumeration is refused beyond this degree: the class-count
/// double loops cost up to (p!)^2 products, which passes 10^9 at p = 8.
inline constexpr int kEnumerationCap = 8;

/// Characters, partitions and primitive integrals stay cheap well past the
/// enumeration cap; this bounds them independently.
inline constexpr int kDegreeCap = 12;

/// Upper bound on |G_I| * |G_JQ| products (or a single group's order) that
/// the engine is willing to enumerate.
inline constexpr long kWorkBudget = 20'000'000;

/// Weakly decreasing sequence of positive integers. Serves both as a cycle
/// type (conjugacy-class label) and as a representation signature.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int weight() const;
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    Partition conjugate() const;

    auto operator<=>(const Partition& o) const = default;

    /// Comma list, e.g. "2,1"; empty partition renders as "".
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

/// Permutation of {1..p} in one-line notation; images are stored 0-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    /// Image of 0-based point x.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    /// Apply `rhs` first, then `*this`.  Throws DegreeMismatch.
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;
    Partition cycle_type() const;

    auto operator<=>(const Permutation& o) const = default;

    /// Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; identity is "e".
    std::string to_cycles() const;
    /// Parse cycle notation; degree < 0 means "largest point mentioned".
    static Permutation from_cycles(const std::string& text, int degree = -1);

private:
    std::vector<int> images_;
};

/// Number of elements of S_p with cycle type c: p! / prod_j j^(a_j) a_j!.
BigInt class_size(const Partition& c);

/// All p! elements of S_p in lexicographic one-line order (identity first).
/// Throws DegreeTooLarge beyond `cap`.
std::vector<Permutation> enumerate_sp(int p, int cap = kEnumerationCap);

/// Restartable stream over S_p for callers that do not want the full vector.
class SpStream {
public:
    explicit SpStream(int p, int cap = kEnumerationCap);
    /// Next element, or false when exhausted.
    bool next(Permutation& out);
    void reset();

private:
    int degree_;
    bool done_;
    std::vector<int> state_;
};

/// Stabilizer of a value sequence as a group of position permutations:
/// the direct product of symmetric groups on the blocks of equal values.
/// Throws DegreeTooLarge when the group order exceeds the work budget.
std::vector<Permutation> young_subgroup(const std::vector<int>& values);

/// Order of the Young subgroup (product of block-size factorials).
BigInt young_subgroup_order(const std::vector<int>& values);

/// All partitions of p in reverse lexicographic order: (p) first, (1^p) last.
std::vector<Partition> partitions_of(int p);

}  // namespace unint
