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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "lehmer_ff/errors.hpp"
#include "lehmer_ff/fpoly.hpp"
#include "oracles.hpp"

using namespace lehmer_ff;

namespace {

Poly P(const Field& f, std::string_view text) { return parse_poly(f, text); }

std::uint64_t mask_of(const Poly& f)
{
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        m |= std::uint64_t{f.coeffs()[i].code} << i;
    return m;
}

Poly random_poly(const Field& f, std::size_t max_degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<std::uint32_t> coef(0, f->q() - 1);
    std::vector<FieldElement> c(deg(rng) + 1);
    for (auto& x : c)
        x = f->element(coef(rng));
    return Poly(f, c);
}

}  // namespace

TEST_CASE("degree of zero is negative infinity")
{
    auto f2 = make_field(2, 1);
    Poly zero(f2);
    CHECK(zero.degree() == NEG_INF);
    CHECK(zero.degree() < Degree(0));
    CHECK((zero.degree() + Degree(3)) == NEG_INF);
    CHECK(zero.degree().str() == "-inf");
    CHECK_THROWS_AS(zero.degree().value(), InvalidInput);
    CHECK(Poly::from_ints(f2, {1, 1, 0, 0}).degree() == Degree(1));
}

TEST_CASE("gcd")
{
    auto f2 = make_field(2, 1);
    CHECK(poly_gcd(P(f2, "x^2+x"), P(f2, "x^2+1")) == P(f2, "x+1"));
    CHECK(poly_gcd(P(f2, "x^3+x+1"), P(f2, "x")) == P(f2, "1"));

    auto f5 = make_field(5, 1);
    auto g = P(f5, "3*x^2+x+4");
    CHECK(poly_gcd(g, Poly(f5)) == monic(g));
    CHECK(poly_gcd(Poly(f5), g) == monic(g));

    CHECK_THROWS_AS(poly_gcd(Poly(f5), Poly(f5)), UndefinedGcd);
    CHECK_THROWS_AS(poly_gcd(P(f5, "x"), P(f2, "x")), FieldMismatch);
    CHECK_THROWS_AS(P(f5, "x") + P(f2, "x"), FieldMismatch);
}

TEST_CASE("gcd properties on random inputs")
{
    std::mt19937_64 rng(11);
    for (auto q : {2u, 3u, 4u, 7u, 9u}) {
        auto f = make_field_of_order(q);
        for (int i = 0; i < 100; ++i) {
            auto a = random_poly(f, 8, rng);
            auto b = random_poly(f, 8, rng);
            auto c = random_poly(f, 3, rng);
            if (a.is_zero() && b.is_zero())
                continue;
            auto g = poly_gcd(a, b);
            CHECK(g.is_monic());
            CHECK(g == poly_gcd(b, a));
            CHECK(poly_mod(a, g).is_zero());
            CHECK(poly_mod(b, g).is_zero());
            if (!c.is_zero())
                CHECK(poly_gcd(a * c, b * c) == monic(g * c));
        }
    }
}

TEST_CASE("division identity")
{
    std::mt19937_64 rng(12);
    auto f = make_field(3, 2);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(f, 9, rng);
        auto b = random_poly(f, 5, rng);
        if (b.is_zero()) {
            CHECK_THROWS_AS(poly_divmod(a, b), DivisionByZero);
            continue;
        }
        auto [quot, rem] = poly_divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
}

TEST_CASE("powmod")
{
    auto f2 = make_field(2, 1);
    CHECK(poly_powmod(P(f2, "x"), 3, P(f2, "x^2+x+1")) == P(f2, "1"));
    CHECK(poly_powmod(P(f2, "x^5+x"), 0, P(f2, "x^3+x+1")) == P(f2, "1"));
    CHECK(poly_powmod(P(f2, "x"), 2, P(f2, "x^2")).is_zero());
    CHECK_THROWS_AS(poly_powmod(P(f2, "x"), 2, P(f2, "1")), InvalidModulus);
    CHECK_THROWS_AS(poly_powmod(P(f2, "x"), 2, Poly(f2)), InvalidModulus);

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> exps(0, 200);
    for (auto q : {2u, 5u, 8u}) {
        auto f = make_field_of_order(q);
        for (int i = 0; i < 50; ++i) {
            auto g = random_poly(f, 6, rng);
            auto m = random_poly(f, 6, rng);
            if (m.degree() < Degree(1))
                continue;
            int e1 = exps(rng), e2 = exps(rng);
            auto lhs = poly_powmod(g, e1 + e2, m);
            auto rhs = poly_mod(poly_powmod(g, e1, m) * poly_powmod(g, e2, m), m);
            CHECK(lhs == rhs);
        }
        // Large exponent against repeated squaring by hand.
        auto m = P(f, "x^4+x+1");
        BigInt e = BigInt(1) << 80;
        Poly r = P(f, "x+1");
        for (int i = 0; i < 80; ++i)
            r = poly_mod(r * r, m);
        CHECK(poly_powmod(P(f, "x+1"), e, m) == r);
    }
}

TEST_CASE("irreducibility")
{
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    CHECK(is_irreducible(P(f2, "x^2+x+1")));
    CHECK_FALSE(is_irreducible(P(f2, "x^2+1")));
    CHECK(is_irreducible(P(f3, "x")));
    CHECK(is_irreducible(P(f3, "2*x^2+2")));
    CHECK_THROWS_AS(is_irreducible(P(f3, "2")), InvalidInput);
    CHECK_THROWS_AS(is_irreducible(Poly(f3)), InvalidInput);

    // Exhaustive agreement with the bitmask oracle, degree <= 10 over F_2.
    for (std::uint64_t m = 2; m < (1u << 11); ++m)
        CHECK(is_irreducible(decode(f2, m)) == oracle::irreducible2(m));
}

TEST_CASE("irreducible listings")
{
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    CHECK(*irreducibles(f2, 3) == std::vector{P(f2, "x^3+x+1"), P(f2, "x^3+x^2+1")});
    CHECK(*irreducibles(f3, 1) == std::vector{P(f3, "x"), P(f3, "x+1"), P(f3, "x+2")});
    CHECK(*irreducibles(f2, 1) == std::vector{P(f2, "x"), P(f2, "x+1")});
    CHECK_THROWS_AS(irreducibles(f2, 0), InvalidDegree);

    for (int d = 1; d <= 12; ++d) {
        std::vector<std::uint64_t> masks;
        for (const auto& g : *irreducibles(f2, d))
            masks.push_back(mask_of(g));
        CAPTURE(d);
        CHECK(masks == oracle::irreducibles2(d));
    }
}

TEST_CASE("irreducible counts")
{
    CHECK(irreducible_count(2, 3) == 2);
    CHECK(irreducible_count(3, 1) == 3);
    CHECK(irreducible_count(2, 4) == 3);
    CHECK(irreducible_count(2, 4) == oracle::irreducibles2(4).size());
    CHECK(irreducible_count(2, 20) == 52377);
    CHECK(irreducible_count(2, 100) == BigInt("12676506002282282755967953152"));
    CHECK_THROWS_AS(irreducible_count(1, 3), InvalidInput);
    CHECK_THROWS_AS(irreducible_count(2, 0), InvalidInput);

    for (std::uint64_t q : {2, 3, 4, 5}) {
        for (std::uint64_t n = 1; n <= 10; ++n) {
            BigInt total = 0;
            for (auto d : oracle::divisors(n))
                total += d * irreducible_count(q, d);
            CHECK(total == oracle::power(q, static_cast<unsigned>(n)));
        }
    }
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        for (std::size_t d = 1; d <= 8; ++d) {
            const auto& list = *irreducibles(f, d);
            CAPTURE(q);
            CAPTURE(d);
            CHECK(BigInt(list.size()) == irreducible_count(q, d));
            CHECK(std::is_sorted(list.begin(), list.end()));
        }
    }
}

TEST_CASE("factorization")
{
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);

    auto a = factor(P(f2, "x^4+x"));
    CHECK(a.unit == f2->one());
    CHECK(a.factors ==
          std::vector<Factor>{{P(f2, "x"), 1}, {P(f2, "x+1"), 1}, {P(f2, "x^2+x+1"), 1}});
    CHECK(a.is_squarefree());
    CHECK(a.total_multiplicity() == 3);

    auto b = factor(P(f3, "2*x"));
    CHECK(b.unit == f3->from_int(2));
    CHECK(b.factors == std::vector<Factor>{{P(f3, "x"), 1}});

    auto c = factor(P(f2, "x^2"));
    CHECK(c.factors == std::vector<Factor>{{P(f2, "x"), 2}});
    CHECK_FALSE(c.is_squarefree());

    auto d = factor(P(f3, "2"));
    CHECK(d.factors.empty());
    CHECK(d.unit == f3->from_int(2));

    CHECK_THROWS_AS(factor(Poly(f2)), CannotFactorZero);
}

TEST_CASE("factorization round-trips exhaustively")
{
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = make_field_of_order(q);
        std::size_t failures = 0, cases = 0;
        for (std::size_t n = 0; n <= 6; ++n) {
            for (const auto& g : enumerate_polys(f, n, false)) {
                auto fac = factor(g);
                ++cases;
                if (fac.expand(f) != g)
                    ++failures;
                for (std::size_t i = 0; i < fac.factors.size(); ++i) {
                    const auto& fi = fac.factors[i];
                    if (!fi.poly.is_monic() || !is_irreducible(fi.poly) || fi.multiplicity == 0)
                        ++failures;
                    if (i > 0 && !(fac.factors[i - 1].poly < fi.poly))
                        ++failures;
                }
            }
        }
        CAPTURE(q);
        CHECK(failures == 0);
        CHECK(cases > 0);
    }
}

TEST_CASE("factorization of larger polynomials")
{
    std::mt19937_64 rng(14);
    for (auto q : {2u, 3u, 5u, 9u}) {
        auto f = make_field_of_order(q);
        for (int i = 0; i < 20; ++i) {
            auto g = random_poly(f, 12, rng);
            if (g.is_zero())
                continue;
            CHECK(factor(g).expand(f) == g);
        }
    }
    CHECK_THROWS_AS(irreducibles(make_field(7, 2), 5), SieveBudgetExceeded);
}

TEST_CASE("enumeration")
{
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    CHECK(enumerate_polys(f2, 2, true).size() == 4);
    CHECK(enumerate_polys(f3, 1, false).size() == 6);
    auto ones = enumerate_polys(f2, 0, true);
    REQUIRE(ones.size() == 1);
    CHECK(*ones.begin() == P(f2, "1"));

    auto f4 = make_field(2, 2);
    auto stream = enumerate_polys(f4, 4, true);
    std::vector<Poly> all(stream.begin(), stream.end());
    CHECK(all.size() == 256);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Poly>(all.begin(), all.end()).size() == all.size());
    for (const auto& g : all) {
        CHECK(g.is_monic());
        CHECK(g.degree() == Degree(4));
    }

    std::vector<Poly> joined;
    for (const auto& block : stream.split(7))
        for (const auto& g : block)
            joined.push_back(g);
    CHECK(joined == all);
    CHECK(stream.split(1000).size() <= 256);
}

TEST_CASE("encoding")
{
    auto f3 = make_field(3, 1);
    CHECK(encode(P(f3, "x^2+2")) == 9 + 2);
    CHECK(decode(f3, 11) == P(f3, "x^2+2"));
    CHECK(encode(Poly(f3)) == 0);
    std::mt19937_64 rng(15);
    auto f = make_field(5, 2);
    for (int i = 0; i < 100; ++i) {
        auto g = random_poly(f, 10, rng);
        CHECK(decode(f, encode(g)) == g);
    }
}

TEST_CASE("text format and parse")
{
    auto f2 = make_field(2, 1);
    auto f4 = make_field(2, 2);
    auto f5 = make_field(5, 1);
    CHECK(format(P(f2, "1+x+x^3")) == "x^3+x+1");
    CHECK(format(P(f5, "x^2-1")) == "x^2+4");
    CHECK(format(P(f5, "(x+1)*(x-1)")) == "x^2+4");
    CHECK(format(P(f5, "3*x")) == "3*x");
    CHECK(format(Poly(f5)) == "0");
    CHECK(format(P(f4, "(t+1)*x^2+t*x+1")) == "(t+1)*x^2+t*x+1");
    CHECK(P(f4, "x^2*(t+1) + x*t + 1") == P(f4, "(t+1)*x^2+t*x+1"));

    CHECK_THROWS_AS(P(f5, "x^"), ParseError);
    CHECK_THROWS_AS(P(f5, "x+(1"), ParseError);
    CHECK_THROWS_AS(P(f5, "y"), ParseError);
    CHECK_THROWS_AS(P(f5, "x^100000"), ParseError);

    std::mt19937_64 rng(16);
    for (auto q : {2u, 4u, 9u, 25u}) {
        auto f = make_field_of_order(q);
        for (int i = 0; i < 100; ++i) {
            auto g = random_poly(f, 8, rng);
            CHECK(P(f, format(g)) == g);
        }
    }
}
