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
#include "kummer/mumford.hpp"

using namespace kummer;

namespace {

const std::vector<std::uint64_t> kF5Genus4{3, 1, 0, 2, 0, 0, 0, 0, 0, 1};  // x^9+2x^3+x+3

Curve<PrimeField> f5_curve() {
    PrimeField k(5);
    return Curve<PrimeField>::make(k, Poly<PrimeField>(k, std::vector<std::uint64_t>(kF5Genus4)));
}

Mumford<PrimeField> f5_point(const Curve<PrimeField>& c) {
    PrimeField k(5);
    // (x^4+4x^3+x^2+2x+3, x^5+x^4+3x^2+2x+4, 3x^3+x^2+x+1)
    Poly<PrimeField> U(k, {3, 2, 1, 4, 1});
    Poly<PrimeField> V(k, {4, 2, 3, 0, 1, 1});
    Poly<PrimeField> R(k, {1, 1, 1, 3});
    return validate_mumford(c, U, V, R);
}

}  // namespace

TEST_CASE("validation accepts the genus-4 paper point and rejects perturbations") {
    auto c = f5_curve();
    auto p = f5_point(c);
    CHECK(p.degree() == 4);
    PrimeField k(5);
    CHECK_THROWS_AS(validate_mumford(c, p.U, p.V, p.R + Poly<PrimeField>::one(k)), MathError);
    CHECK_THROWS_AS(validate_mumford(c, p.U.scaled(2), p.V, p.R), MathError);
    // identity triple
    auto id = jacobian_identity(c);
    CHECK(validate_mumford(c, id.U, id.V, id.R) == id);
    CHECK(id.degree() == 0);
}

TEST_CASE("group law basics: identity, inverse, commutativity, associativity") {
    PrimeField k(7);
    auto x = Poly<PrimeField>::x(k);
    for (int g = 1; g <= 3; ++g) {
        std::vector<std::uint64_t> cf(2 * g + 2, 0);
        cf[2 * g + 1] = 1;
        cf[1] = 1;
        cf[0] = 3;
        auto curve = Curve<PrimeField>::make(k, Poly<PrimeField>(k, std::move(cf)));
        auto pts = enumerate_points(curve);
        Rng rng(42 + g);
        auto id = jacobian_identity(curve);
        for (int t = 0; t < 15; ++t) {
            const auto& a = pts[rng() % pts.size()];
            const auto& b = pts[rng() % pts.size()];
            const auto& c = pts[rng() % pts.size()];
            CHECK(cantor_add(curve, a, id) == a);
            CHECK(cantor_add(curve, a, cantor_negate(curve, a)) == id);
            CHECK(cantor_add(curve, a, b) == cantor_add(curve, b, a));
            CHECK(cantor_add(curve, cantor_add(curve, a, b), c) == cantor_add(curve, a, cantor_add(curve, b, c)));
        }
    }
}

TEST_CASE("paper golden: [16]P on the genus-4 curve over F_5") {
    auto c = f5_curve();
    auto p = f5_point(c);
    PrimeField k(5);
    auto q16 = cantor_mul(c, p, 16);
    Poly<PrimeField> expect_u(k, {1, 3, 1, 2, 1});
    Poly<PrimeField> expect_v(k, {4, 4, 2, 3, 3, 1});
    Poly<PrimeField> expect_r(k, {2, 0, 3, 4});
    CHECK(q16.U == expect_u);
    CHECK(q16.V == expect_v);
    CHECK(q16.R == expect_r);
    // 4 doublings agree with multiplication by 16
    auto d = p;
    for (int i = 0; i < 4; ++i) d = cantor_double(c, d);
    CHECK(d == q16);
}

TEST_CASE("doubling the identity and 2-torsion") {
    PrimeField k(7);
    // split curve: f = x(x-1)(x-2)(x-3)(x-4), disc != 0 over F_7
    auto x = Poly<PrimeField>::x(k);
    auto f = Poly<PrimeField>::one(k);
    for (int a = 0; a < 5; ++a) f = f * (x - Poly<PrimeField>::constant(k, a));
    auto curve = Curve<PrimeField>::make(k, f);
    auto sd = splitting_data(curve.f);
    REQUIRE(sd.d == 1);
    std::vector<std::uint64_t> roots;
    for (auto& r : sd.roots) roots.push_back(r[0]);
    auto id = jacobian_identity(curve);
    CHECK(cantor_double(curve, id) == id);

    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        std::vector<int> I;
        for (int i = 0; i < 5; ++i)
            if (rng() & 1) I.push_back(i);
        auto d = two_torsion_divisor(curve, roots, I);
        CHECK(cantor_double(curve, d) == id);
    }
    CHECK(two_torsion_divisor(curve, roots, {}) == id);
}

TEST_CASE("2-torsion group: [D_I] + [D_J] = [D_{I xor J}]") {
    PrimeField k(7);
    auto x = Poly<PrimeField>::x(k);
    auto f = Poly<PrimeField>::one(k);
    for (int a = 0; a < 5; ++a) f = f * (x - Poly<PrimeField>::constant(k, a));
    auto curve = Curve<PrimeField>::make(k, f);
    std::vector<std::uint64_t> roots{0, 1, 2, 3, 4};
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        std::uint32_t mi = static_cast<std::uint32_t>(rng() % 32), mj = static_cast<std::uint32_t>(rng() % 32);
        auto to_set = [](std::uint32_t m) {
            std::vector<int> s;
            for (int i = 0; i < 5; ++i)
                if (m >> i & 1) s.push_back(i);
            return s;
        };
        auto di = two_torsion_divisor(curve, roots, to_set(mi));
        auto dj = two_torsion_divisor(curve, roots, to_set(mj));
        auto dxor = two_torsion_divisor(curve, roots, to_set(mi ^ mj));
        CHECK(cantor_add(curve, di, dj) == dxor);
    }
}

TEST_CASE("enumeration: g=1, f=x^3+x+1 over F_5 has 9 points") {
    PrimeField k(5);
    Poly<PrimeField> f(k, {1, 1, 0, 1});
    auto curve = Curve<PrimeField>::make(k, f);
    auto pts = enumerate_points(curve);
    CHECK(pts.size() == 9);
    // cross-check with the naive (x, y) count plus infinity
    int count = 1;
    for (std::uint64_t xx = 0; xx < 5; ++xx)
        for (std::uint64_t yy = 0; yy < 5; ++yy)
            if (k.mul(yy, yy) == f.eval(xx)) ++count;
    CHECK(count == 9);
    // identity present, all points validate, group order annihilates
    auto id = jacobian_identity(curve);
    CHECK(std::find(pts.begin(), pts.end(), id) != pts.end());
    for (const auto& p : pts) {
        CHECK_NOTHROW(validate_mumford(curve, p.U, p.V, p.R));
        CHECK(cantor_mul(curve, p, static_cast<long>(pts.size())) == id);
    }
}

TEST_CASE("re-validating an output reproduces it bit-exactly") {
    auto c = f5_curve();
    auto p = f5_point(c);
    auto q = cantor_add(c, p, cantor_double(c, p));
    auto r = validate_mumford(c, q.U, q.V, q.R);
    CHECK(r == q);
}

TEST_CASE("enumeration budget guard") {
    PrimeField k(101);
    auto x = Poly<PrimeField>::x(k);
    auto f = x.shifted(4) + x + Poly<PrimeField>::constant(k, 3);
    auto curve = Curve<PrimeField>::make(k, f);
    CHECK_THROWS_AS(enumerate_points(curve), MathError);
}
