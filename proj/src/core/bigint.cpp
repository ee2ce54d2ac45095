/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bigint.hpp"

namespace rcbethe {

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    // r stays integral: after step i it equals C(n - k + i, i).
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace rcbethe
