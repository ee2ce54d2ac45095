/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcbethe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient. Returns 0 for k < 0 or k > n, and for n < 0.
BigInt binomial(long n, long k);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace rcbethe
