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

#include <cstddef>
#include <vector>

#include "lehmer_ff/fpoly.hpp"
#include "lehmer_ff/numeric.hpp"

namespace lehmer_ff {

struct TotientReport {
    Poly f;
    BigInt phi;
    /// q^deg(f) - 1
    BigInt modulus_value;
    bool divides = false;
    bool reducible = false;
    Factorization factorization;
};

struct LehmerVerdict {
    /// phi(q, f) divides q^deg(f) - 1.
    bool in_script_L = false;
    /// in_script_L and f is reducible.
    bool in_L = false;
    TotientReport report;
};

/// prod_i q^{n_i (r_i - 1)} (q^{n_i} - 1) over the factorization.
BigInt totient(const Factorization& fac, std::uint64_t q);

/// Euler totient of f in F_q[x], from its factorization. Independent of the
/// unit of f. Throws InvalidInput when deg f < 1.
BigInt totient(const Poly& f);

/// Counts residues g with deg g < deg f and gcd(f, g) = 1 directly; g = 0
/// never counts since gcd(f, 0) = monic(f). Exponential; throws
/// OracleOverflow when q^deg(f) > 2^24.
BigInt totient_bruteforce(const Poly& f);

TotientReport totient_report(const Poly& f);
LehmerVerdict is_lehmer(const Poly& f);

struct LehmerSweepOptions {
    bool expand_units = false;
    unsigned workers = 1;
};

/// Every reducible f with 1 <= deg f <= max_degree and phi(q, f) | q^deg f - 1,
/// found by exhaustive sweep over monic polynomials. With expand_units each
/// hit is returned with every nonzero scalar multiple. Sorted canonically.
///
/// Before returning, asserts on every hit that it is squarefree, that every
/// irreducible factor degree divides deg f, and that it has at least
/// floor(log2(q + 1)) distinct irreducible factors; a failure throws
/// InvariantViolation.
std::vector<Poly> lehmer_set(const Field& field, std::size_t max_degree, const LehmerSweepOptions& options = {});

/// floor(log2(q + 1))
unsigned min_lehmer_factor_count(std::uint64_t q);

/// Problems with f as a member of the Lehmer set: non-squarefree, a factor
/// degree not dividing deg f, or too few distinct factors. Empty when fine.
std::vector<std::string> lehmer_invariant_violations(const Poly& f, const Factorization& fac);

}  // namespace lehmer_ff
