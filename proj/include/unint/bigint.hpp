#pragma once

#include <gmpxx.h>

namespace unint {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(long k);
BigInt binomial(long k, long j);

}  // namespace unint
