/*
 * Copyright 2026 The spinor-kummer developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"
#include "kummer/factor.hpp"
#include "kummer/fields.hpp"

using namespace kummer;

// field axioms on random triples, shared across all implemented fields
template <class F>
static void check_axioms(const F& k, Rng& rng) {
    for (int trial = 0; trial < 64; ++trial) {
        auto a = k.random(rng), b = k.random(rng), c = k.random(rng);
        CHECK(k.eq(k.add(k.add(a, b), c), k.add(a, k.add(b, c))));
        CHECK(k.eq(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c))));
        CHECK(k.eq(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c))));
        CHECK(k.eq(k.add(a, b), k.add(b, a)));
        CHECK(k.eq(k.mul(a, b), k.mul(b, a)));
        CHECK(k.eq(k.add(a, k.neg(a)), k.zero()));
        CHECK(k.eq(k.mul(a, k.one()), a));
        if (!k.is_zero(a)) CHECK(k.eq(k.mul(a, k.inv(a)), k.one()));
    }
}

TEST_CASE("field axioms hold over Q, F_p and F_{p^d}") {
    Rng rng(7);
    check_axioms(RationalField{}, rng);
    check_axioms(PrimeField(5), rng);
    check_axioms(PrimeField(101), rng);
    check_axioms(make_extension(PrimeField(5), 2), rng);
    check_axioms(make_extension(PrimeField(7), 3), rng);
}

TEST_CASE("characteristic 2 and composite moduli are rejected") {
    CHECK_THROWS_AS(PrimeField(2), MathError);
    CHECK_THROWS_AS(PrimeField(15), MathError);
}

TEST_CASE("rational elements serialise in lowest terms") {
    RationalField q;
    mpq_class x(6, 4);
    x.canonicalize();
    CHECK(q.str(x) == "3/2");
    CHECK(q.str(mpq_class(-5)) == "-5");
}

TEST_CASE("prime field squares obey Euler's criterion") {
    PrimeField k(13);
    int squares = 0;
    for (std::uint64_t a = 1; a < 13; ++a)
        if (k.is_square(a)) ++squares;
    CHECK(squares == 6);
    CHECK(k.is_square(0));
}

TEST_CASE("extension field inverse and frobenius") {
    ExtField k = make_extension(PrimeField(5), 9);
    CHECK(k.degree() == 9);
    Rng rng(3);
    for (int i = 0; i < 16; ++i) {
        auto a = k.random(rng);
        if (k.is_zero(a)) continue;
        CHECK(k.is_one(k.mul(a, k.inv(a))));
        // frobenius fixes exactly F_p
        auto fr = a;
        for (int j = 0; j < 9; ++j) fr = k.frobenius(fr);
        CHECK(k.eq(fr, a));
    }
    // trace maps into the prime field and is F_p-linear
    auto a = k.random(rng), b = k.random(rng);
    PrimeField fp = k.base();
    CHECK(k.trace(k.add(a, b)) == fp.add(k.trace(a), k.trace(b)));
}
