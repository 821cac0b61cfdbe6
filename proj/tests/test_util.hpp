#pragma once

#include <initializer_list>
#include <vector>

#include "unint/perm.hpp"
#include "unint/ratfunc.hpp"

namespace unint::testutil {

inline Polynomial poly(std::initializer_list<long> coeffs_low_first) {
    std::vector<BigInt> coeffs;
    for (long c : coeffs_low_first) coeffs.emplace_back(c);
    return Polynomial(std::move(coeffs));
}

inline RatFunc rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RatFunc(poly(num), poly(den));
}

/// constant * prod (n+a)^m, offsets/multiplicities given directly.
inline RatFunc factored(long constant, std::initializer_list<std::pair<long, long>> roots) {
    return RatFunc::from_factored(Rational(constant), std::vector<std::pair<long, long>>(roots));
}

inline Partition partition(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

}  // namespace unint::testutil
