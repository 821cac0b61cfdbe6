#pragma once

#include <vector>

#include "unint/perm.hpp"
#include "unint/ratfunc.hpp"

namespace unint {

/// Character of the class c in the S_p irreducible with signature f,
/// computed by border-strip (Murnaghan-Nakayama) recursion with memoization.
/// Throws WeightMismatch unless f and c are partitions of the same p.
long long character(const Partition& f, const Partition& c);

/// Dimension of the S_p irreducible f (hook-length formula).
long long dim_sp(const Partition& f);

/// Dimension of the U(n) irreducible with signature f, as a polynomial in
/// the symbolic dimension n: prod over cells (n + col - row) / hook.
RatFunc dim_un(const Partition& f);

struct CharacterTable {
    int degree = 0;
    std::vector<Partition> rows;                   // signatures, (p) first
    std::vector<Partition> cols;                   // classes, identity class first
    std::vector<BigInt> class_sizes;               // aligned with cols
    std::vector<std::vector<long long>> entries;   // entries[row][col]
};

/// Complete character table of S_p; throws DegreeTooLarge beyond the cap.
CharacterTable character_table(int p, int cap = kDegreeCap);

}  // namespace unint
