/*
   Copyright 2026 The lehmer-ff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace lehmer_ff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_dec_float_50;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r);

BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Small-integer number theory used throughout. Arguments are machine
/// integers; every routine is exact.
namespace arith {

bool is_prime(std::uint64_t n);

/// Deterministic Miller-Rabin valid for the whole 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Sorted ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t sigma(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
unsigned ord2(std::uint64_t n);

}  // namespace arith
}  // namespace lehmer_ff
