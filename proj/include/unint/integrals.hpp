#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "unint/characters.hpp"
#include "unint/perm.hpp"
#include "unint/ratfunc.hpp"

namespace unint {

/// One factor U_{row,col} (or its conjugate) raised to `mult`.
struct Factor {
    long row = 0;
    long col = 0;
    long mult = 1;

    auto operator<=>(const Factor&) const = default;
};

/// A raw monomial integral over U(n): a multiset of conjugated factors and a
/// multiset of plain factors. Index labels are opaque; only their equality
/// pattern matters.
struct IntegralSpec {
    std::vector<Factor> conj;
    std::vector<Factor> plain;

    /// Total conjugated multiplicity (the would-be degree).
    long conj_degree() const;
    long plain_degree() const;
    long max_index() const;

    /// Grammar: `conj: i,j[,mult]; i,j; ...; plain: k,l[,mult]; ...`
    static IntegralSpec parse_text(std::string_view text);
    std::string to_text() const;

    /// {"conj": [[i,j,mult], ...], "plain": [[k,l,mult], ...]}
    static IntegralSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Proof that an integral vanishes identically.
struct ZeroIntegral {
    enum class Reason { degree_mismatch, row_mismatch, col_mismatch };
    Reason reason;
    std::string describe() const;
};

/// Nonvanishing integral brought to the form <IJ|IJ_Q> with normalized
/// labels and its three symmetry groups attached.
struct CanonicalIntegral {
    int degree = 0;
    std::vector<int> rows;            // I
    std::vector<int> cols;            // J
    std::vector<int> exchanged_cols;  // J_Q
    Permutation exchange;             // Q
    std::vector<Permutation> row_group;            // G_I
    std::vector<Permutation> col_group;            // G_J
    std::vector<Permutation> exchanged_col_group;  // G_JQ

    /// Rebuild a spec (unit multiplicities) denoting this integral.
    IntegralSpec to_spec() const;
};

using CanonicalResult = std::variant<ZeroIntegral, CanonicalIntegral>;

/// Decide vanishing, match plain factors to conjugated ones to extract the
/// exchange permutation Q, normalize labels, and attach symmetry groups.
/// Never throws for vanishing inputs: zero is an answer, not an error.
CanonicalResult canonicalize(const IntegralSpec& spec);

/// N[c] for every class c of S_p: the number of products Q T R with
/// T in G_JQ and R in G_I lying in class c.
struct ClassCounts {
    int degree = 0;
    std::map<Partition, BigInt> counts;

    BigInt total() const;
};

/// Throws DegreeTooLarge when the double enumeration exceeds the work
/// budget and no nested-subgroup shortcut applies.
ClassCounts class_counts(const CanonicalIntegral& ci);

/// Same counts with an explicit exchange element (used to confirm that the
/// result does not depend on which valid Q was picked).
ClassCounts class_counts_with_exchange(const CanonicalIntegral& ci, const Permutation& q);

/// Primitive integral for the class c: sum over signatures f of
/// d_f^2 chi_f(c) / ((p!)^2 dim_un(f)).  Memoized.
RatFunc xi(const Partition& c);

/// Exact value sum_c N[c] xi[c].
RatFunc evaluate_gtm(const CanonicalIntegral& ci);
/// Convenience overload; vanishing integrals give the zero function.
RatFunc evaluate_gtm(const IntegralSpec& spec);

enum class OrderlyClass { Disjoint, Nested, NonOrderly };

std::string to_string(OrderlyClass c);

/// Nested if one symmetry group contains the other; Disjoint if they move
/// disjoint sets of points (and hence only share the identity); NonOrderly
/// otherwise. Advisory only: values never depend on this.
OrderlyClass classify_orderly(const CanonicalIntegral& ci);

/// The conjugate-swapped, transposed, and doubly-transformed variants,
/// re-canonicalized. All of them have the same value as the input.
std::vector<CanonicalIntegral> symmetry_transforms(const CanonicalIntegral& ci);

}  // namespace unint
