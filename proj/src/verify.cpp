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

#include "lehmer_ff/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lehmer_ff/cyclo.hpp"
#include "lehmer_ff/errors.hpp"
#include "lehmer_ff/lehmer_search.hpp"
#include "lehmer_ff/totient.hpp"

namespace lehmer_ff {

bool SuiteReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json SuiteReport::to_json() const
{
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"suite", suite}, {"passed", passed()}, {"checks", list}};
}

std::string SuiteReport::to_text() const
{
    std::ostringstream os;
    os << "suite " << suite << ": " << (passed() ? "PASSED" : "FAILED") << "\n";
    for (const auto& c : checks)
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    return os.str();
}

std::string set_diff(const std::vector<std::string>& expected, const std::vector<std::string>& found)
{
    const std::set<std::string> e(expected.begin(), expected.end()), f(found.begin(), found.end());
    auto join = [](const std::vector<std::string>& v) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + v[i];
        return out + "}";
    };
    std::vector<std::string> missing, unexpected;
    std::set_difference(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(missing));
    std::set_difference(f.begin(), f.end(), e.begin(), e.end(), std::back_inserter(unexpected));
    return "missing: " + join(missing) + "; unexpected: " + join(unexpected);
}

namespace {

std::vector<std::string> texts(const std::vector<Poly>& v)
{
    std::vector<std::string> out;
    for (const auto& p : v)
        out.push_back(format(p));
    return out;
}

CheckResult compare_sets(std::string name, const std::vector<std::string>& expected,
                         const std::vector<std::string>& found)
{
    const bool same = std::multiset<std::string>(expected.begin(), expected.end()) ==
                      std::multiset<std::string>(found.begin(), found.end());
    return {std::move(name), same,
            same ? std::to_string(found.size()) + " members, exact match" : set_diff(expected, found)};
}

// Accumulates counterexamples for one property check.
struct Tally {
    explicit Tally(std::string n) : name(std::move(n)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
    CheckResult result() const
    {
        if (failures == 0)
            return {name, true, std::to_string(cases) + " cases, 0 failures"};
        return {name, false,
                std::to_string(failures) + " of " + std::to_string(cases) + " cases failed; first: " + first_failure};
    }
};

std::uint64_t int_pow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

std::string hit_text(std::uint64_t a, const Partition& p) { return "(" + std::to_string(a) + "," + p.str() + ")"; }

}  // namespace

std::size_t default_sweep_degree(std::uint32_t q)
{
    switch (q) {
    case 2:
        return 12;
    case 3:
        return 8;
    case 4:
    case 5:
        return 7;
    default:
        return 5;
    }
}

std::vector<Poly> expected_lehmer_set(const Field& field, std::size_t max_degree)
{
    std::vector<std::string> texts;
    if (field->q() == 2)
        texts = {"x*(x+1)",
                 "x*(x+1)*(x^2+x+1)",
                 "x*(x^2+x+1)*(x^3+x+1)",
                 "(x+1)*(x^2+x+1)*(x^3+x+1)",
                 "x*(x^2+x+1)*(x^3+x^2+1)",
                 "(x+1)*(x^2+x+1)*(x^3+x^2+1)"};
    else if (field->q() == 3)
        texts = {"x*(x+1)", "x*(x-1)", "(x+1)*(x-1)"};
    std::vector<Poly> out;
    for (const auto& t : texts) {
        Poly f = parse_poly(field, t);
        if (f.degree() <= Degree(max_degree))
            out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SuiteReport verify_main_theorem(const MainTheoremOptions& options)
{
    SuiteReport report{"main-theorem", {}};
    std::vector<std::uint32_t> orders = options.orders;
    if (orders.empty())
        orders = {2, 3, 4, 5};
    for (std::uint32_t q : orders) {
        const Field field = make_field_of_order(q);
        const std::size_t max_degree = options.max_degree.value_or(default_sweep_degree(q));
        const std::string tag = "q=" + std::to_string(q) + " deg<=" + std::to_string(max_degree);
        std::vector<Poly> found;
        try {
            found = lehmer_set(field, max_degree, {false, options.workers});
        } catch (const InvariantViolation& e) {
            report.checks.push_back({"structural properties " + tag, false, e.what()});
            continue;
        }
        const auto expected = expected_lehmer_set(field, max_degree);
        report.checks.push_back(compare_sets("monic L-set " + tag, texts(expected), texts(found)));

        Tally props{"squarefree and Schettler properties " + tag};
        for (const Poly& f : found) {
            const auto problems = lehmer_invariant_violations(f, factor(f));
            props.check(problems.empty(), problems.empty() ? "" : problems.front());
        }
        report.checks.push_back(props.result());

        if (q == 3) {
            std::vector<Poly> expanded_expected;
            for (const Poly& f : expected)
                for (std::uint32_t u = 1; u < q; ++u)
                    expanded_expected.push_back(f.scaled(field->element(u)));
            const auto expanded = lehmer_set(field, max_degree, {true, options.workers});
            report.checks.push_back(
                compare_sets("unit-expanded L-set " + tag, texts(expanded_expected), texts(expanded)));
        }
    }
    return report;
}

SuiteReport verify_prop31(std::uint64_t a_max, unsigned n_max, unsigned workers)
{
    SuiteReport report{"prop31", {}};
    std::vector<std::string> expected{hit_text(3, Partition({1, 1}))};
    if (n_max >= 4)
        expected.push_back(hit_text(3, Partition({1, 1, 1, 1})));
    std::vector<std::string> found;
    for (const auto& h : classify_a_ge_3(a_max, n_max, 3, workers))
        found.push_back(hit_text(h.a, h.partition));
    report.checks.push_back(compare_sets(
        "a in [3," + std::to_string(a_max) + "], n in [2," + std::to_string(n_max) + "] divisibility hits", expected,
        found));

    Tally consistency{"cyclotomic exponent map matches the quotient, n <= 20, a in {2,3,4}"};
    Tally shape{"exponent of Phi_1 is 1 - s and numerator exponents are 1"};
    for (unsigned n = 2; n <= 20; ++n) {
        for (const Partition& part : partitions(n)) {
            const ExponentMap em(n, part);
            bool shape_ok = em.at(1) == 1 - static_cast<int>(part.s());
            for (unsigned d : em.numerator_indices())
                shape_ok = shape_ok && em.at(d) == 1;
            shape.check(shape_ok, part.str());
            for (std::uint64_t a = 2; a <= 4; ++a) {
                BigInt denom = 1;
                for (unsigned e : part.parts())
                    denom *= ipow(BigInt(a), e) - 1;
                const Rational direct(ipow(BigInt(a), n) - 1, denom);
                const Rational via_map = em.evaluate(a);
                const bool integral = boost::multiprecision::denominator(via_map) == 1;
                consistency.check(via_map == direct && integral == mersenne_divisibility(a, part),
                                  hit_text(a, part));
            }
        }
    }
    report.checks.push_back(consistency.result());
    report.checks.push_back(shape.result());

    Tally lemma{"a = 2, n <= 24: dividing partitions have parts dividing n and gcd 1"};
    for (unsigned n = 2; n <= 24; ++n) {
        for (const Partition& part : partitions(n)) {
            if (!mersenne_divisibility(2, part))
                continue;
            unsigned g = 0;
            bool divides = true;
            for (unsigned e : part.parts()) {
                g = std::gcd(g, e);
                divides = divides && n % e == 0;
            }
            lemma.check(divides && g == 1, part.str());
        }
    }
    report.checks.push_back(lemma.result());
    return report;
}

SuiteReport verify_prop36_suite(unsigned n_max, unsigned workers)
{
    SuiteReport report{"prop36", {}};
    std::vector<std::string> expected;
    for (auto parts : {std::vector<unsigned>{1, 1}, {1, 1, 2}, {1, 2, 3}}) {
        Partition p(parts);
        if (p.n() <= n_max)
            expected.push_back(p.str());
    }
    std::vector<std::string> found;
    for (const auto& p : verify_prop36(n_max, workers))
        found.push_back(p.str());
    report.checks.push_back(
        compare_sets("admissible partitions of n <= " + std::to_string(n_max) + " dividing 2^n - 1", expected, found));
    return report;
}

SuiteReport verify_cyclo_lemmas()
{
    SuiteReport report{"cyclo-lemmas", {}};
    auto tag = [](auto... xs) {
        std::string s;
        ((s += (s.empty() ? "" : ",") + std::to_string(xs)), ...);
        return "(" + s + ")";
    };

    Tally identity{"prod_{d|n} Phi_d(a) = a^n - 1, n <= 200, a in [2,10]"};
    for (std::uint64_t n = 1; n <= 200; ++n)
        for (std::uint64_t a = 2; a <= 10; ++a) {
            BigInt prod = 1;
            for (auto d : arith::divisors(n))
                prod *= cyclotomic_eval(d, BigInt(a));
            identity.check(prod == ipow(BigInt(a), n) - 1, tag(n, a));
        }
    report.checks.push_back(identity.result());

    Tally lift{"p | Phi_{mp^v}(a) iff p | Phi_m(a), with valuations"};
    for (std::uint64_t p : {2, 3, 5})
        for (std::uint64_t m = 1; m <= 30; ++m) {
            if (m % p == 0)
                continue;
            for (unsigned v = 1; v <= 3; ++v) {
                const std::uint64_t n = m * int_pow(p, v);
                for (std::uint64_t a = 2; a <= 10; ++a) {
                    const BigInt lifted = cyclotomic_eval(n, BigInt(a));
                    const bool base_div = cyclotomic_eval(m, BigInt(a)) % p == 0;
                    bool ok = (lifted % p == 0) == base_div;
                    if (base_div && n > 2)
                        ok = ok && ord_p(p, lifted) == 1;
                    if (base_div && n == 2)
                        ok = ok && ord_p(2, lifted) == ord_p(2, BigInt(a + 1));
                    lift.check(ok, tag(p, m, v, a));
                }
            }
        }
    report.checks.push_back(lift.result());

    Tally exists{"(exists a <= p^2 with p | Phi_n(a)) iff m | p - 1, bounded window"};
    for (std::uint64_t p : {3, 5, 7, 11, 13})
        for (std::uint64_t n = 1; n <= 60; ++n) {
            std::uint64_t m = n;
            while (m % p == 0)
                m /= p;
            bool any = false;
            for (std::uint64_t a = 1; a <= p * p && !any; ++a)
                any = cyclotomic_eval(n, BigInt(a)) % p == 0;
            exists.check(any == ((p - 1) % m == 0), tag(p, n));
        }
    report.checks.push_back(exists.result());

    Tally prime_power{"p | Phi_{p^v}(a) iff p | a - 1, p in {2,3,5}, v <= 3, a <= 20"};
    for (std::uint64_t p : {2, 3, 5})
        for (unsigned v = 0; v <= 3; ++v)
            for (std::uint64_t a = 2; a <= 20; ++a) {
                const auto n = int_pow(p, v);
                prime_power.check((cyclotomic_eval(n, BigInt(a)) % p == 0) == ((a - 1) % p == 0), tag(p, v, a));
            }
    report.checks.push_back(prime_power.result());

    Tally coprime{"gcd(Phi_n(a), Phi_m(a)) is 1 or a prime p with m = p^v n, n < m <= 40"};
    for (std::uint64_t m = 2; m <= 40; ++m)
        for (std::uint64_t n = 1; n < m; ++n)
            for (std::uint64_t a = 2; a <= 8; ++a) {
                const BigInt g = gcd(cyclotomic_eval(n, BigInt(a)), cyclotomic_eval(m, BigInt(a)));
                bool ok = true;
                if (g != 1) {
                    ok = g < (BigInt(1) << 63) && arith::is_prime(g.convert_to<std::uint64_t>());
                    if (ok) {
                        const auto p = g.convert_to<std::uint64_t>();
                        std::uint64_t r = m;
                        unsigned v = 0;
                        while (r % p == 0 && r != n) {
                            r /= p;
                            ++v;
                        }
                        ok = r == n && v >= 1;
                    }
                }
                coprime.check(ok, tag(n, m, a));
            }
    report.checks.push_back(coprime.result());

    Tally unit_value{"|Phi_m(a)| = 1 only at (m, a) = (1, 2), m <= 100, a in [2,10]"};
    for (std::uint64_t m = 1; m <= 100; ++m)
        for (std::uint64_t a = 2; a <= 10; ++a)
            unit_value.check((abs(cyclotomic_eval(m, BigInt(a))) == 1) == (m == 1 && a == 2), tag(m, a));
    report.checks.push_back(unit_value.result());

    Tally size{"a^phi(n)/2 <= Phi_n(a) <= 2 a^phi(n), n in [2,100], a in [2,10]"};
    for (std::uint64_t n = 2; n <= 100; ++n)
        for (std::uint64_t a = 2; a <= 10; ++a) {
            const BigInt v = cyclotomic_eval(n, BigInt(a));
            const BigInt power = ipow(BigInt(a), arith::euler_phi(n));
            size.check(2 * v >= power && v <= 2 * power, tag(n, a));
        }
    report.checks.push_back(size.result());

    Tally estimate{"primitive part of 2^n - 1 >= Phi_n(2)/n >= 2^phi(n)/(2n), n in [7,60]"};
    for (std::uint64_t n = 7; n <= 60; ++n) {
        const BigInt m = zsigmondy(2, 1, n).primitive_part;
        const BigInt phi_n = cyclotomic_eval(n, BigInt(2));
        estimate.check(m == primitive_part_structural(2, 1, n) && m * n >= phi_n &&
                           2 * phi_n >= ipow(BigInt(2), arith::euler_phi(n)),
                       tag(n));
    }
    report.checks.push_back(estimate.result());

    Tally zsig{"primitive divisors of a^n - 1 exist except at (2,1,6) and n = 2, a + 1 = 2^k; a <= 12, n <= 30"};
    for (std::uint64_t a = 2; a <= 12; ++a)
        for (std::uint64_t n = 2; n <= 30; ++n) {
            const bool predicted_exception = zsigmondy_exception(a, 1, n).has_value();
            const bool structural_has = primitive_part_structural(a, 1, n) > 1;
            bool ok = structural_has != predicted_exception;
            if (ipow(BigInt(a), n) - 1 <= ZsigmondyOptions{}.factoring_budget) {
                const auto r = zsigmondy(a, 1, n);
                ok = ok && r.primitive_primes.empty() == r.exception.has_value() &&
                     r.primitive_part == primitive_part_structural(a, 1, n);
            }
            zsig.check(ok, tag(a, n));
        }
    report.checks.push_back(zsig.result());
    return report;
}

SuiteReport verify_bounds(std::uint64_t n_max)
{
    SuiteReport report{"bounds", {}};
    auto as_check = [&](std::string name, const std::vector<std::uint64_t>& bad, std::uint64_t first) {
        const std::uint64_t cases = n_max >= first ? n_max - first + 1 : 0;
        if (bad.empty())
            return CheckResult{std::move(name), true, std::to_string(cases) + " cases, 0 violations"};
        return CheckResult{std::move(name), false,
                           std::to_string(bad.size()) + " violations; first n = " + std::to_string(bad.front())};
    };
    report.checks.push_back(as_check("sigma(n)/n < 1.28 n^(1/4), n <= " + std::to_string(n_max),
                                     abundancy_bound_violations(n_max), 1));
    report.checks.push_back(as_check("phi(n) > c(n) n^(3/4), 2 <= n <= " + std::to_string(n_max),
                                     totient_bound_violations(n_max), 2));
    return report;
}

SuiteReport verify_oracle(std::uint64_t seed)
{
    SuiteReport report{"oracle", {}};
    const std::pair<std::uint32_t, std::size_t> sweeps[] = {{2, 6}, {3, 4}, {4, 4}};
    for (auto [q, max_deg] : sweeps) {
        const Field field = make_field_of_order(q);
        Tally t{"totient formula = residue count, monic deg <= " + std::to_string(max_deg) + " over F_" +
                std::to_string(q)};
        for (std::size_t n = 1; n <= max_deg; ++n)
            for (const Poly& f : enumerate_polys(field, n, true))
                t.check(totient(f) == totient_bruteforce(f), format(f));
        report.checks.push_back(t.result());
    }

    std::mt19937_64 rng(seed);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field field = make_field_of_order(q);
        Tally t{"g^phi(f) = 1 mod f for 100 random coprime pairs over F_" + std::to_string(q)};
        const Poly one = Poly::constant(field, field->one());
        while (t.cases < 100) {
            const std::size_t deg_f = 1 + rng() % 6;
            const auto f_stream = enumerate_polys(field, deg_f, true);
            const Poly f = f_stream.at(rng() % f_stream.size());
            const std::size_t deg_g = rng() % (deg_f + 3);
            const auto g_stream = enumerate_polys(field, deg_g, false);
            const Poly g = g_stream.at(rng() % g_stream.size());
            if (poly_gcd(f, g) != one)
                continue;
            t.check(poly_powmod(g, totient(f), f) == one, format(g) + " mod " + format(f));
        }
        report.checks.push_back(t.result());
    }

    for (std::uint32_t q : {3u, 4u}) {
        const Field field = make_field_of_order(q);
        Tally t{"Lehmer membership is unit invariant, deg <= 4 over F_" + std::to_string(q)};
        for (std::size_t n = 1; n <= 4; ++n)
            for (const Poly& f : enumerate_polys(field, n, true)) {
                const bool member = is_lehmer(f).in_L;
                for (std::uint32_t u = 2; u < q; ++u)
                    t.check(is_lehmer(f.scaled(field->element(u))).in_L == member, format(f));
            }
        report.checks.push_back(t.result());
    }
    return report;
}

}  // namespace lehmer_ff
