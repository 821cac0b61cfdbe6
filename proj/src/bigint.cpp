#include "unint/bigint.hpp"

#include <stdexcept>

namespace unint {

BigInt factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt binomial(long k, long j) {
    if (j < 0 || j > k) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    return r;
}

}  // namespace unint
