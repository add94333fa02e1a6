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
#include "kummer/kummer_map.hpp"

using namespace kummer;

namespace {

// Draw a random Mumford triple of degree m by choosing (U, R, V) first and
// letting the curve be f = U V + R^2.
template <class F>
std::pair<Curve<F>, Mumford<F>> random_curve_with_point(const F& k, int g, int m, Rng& rng) {
    while (true) {
        Poly<F> U = poly_random_monic(k, m, rng);
        Poly<F> V = poly_random_monic(k, 2 * g + 1 - m, rng);
        std::vector<typename F::Elem> rc(std::max(m, 1), k.zero());
        for (auto& c : rc) c = k.random(rng);
        if (m == 0) rc.assign(1, k.zero());
        Poly<F> R(k, std::move(rc));
        R = m == 0 ? Poly<F>::zero(k) : poly_divmod(R, U).second;
        Poly<F> f = U * V + R * R;
        if (k.is_zero(poly_discriminant(f))) continue;
        auto curve = Curve<F>::make(k, f);
        return {curve, validate_mumford(curve, U, V, R)};
    }
}

template <class F>
bool proportional(const F& k, const SpinVec<F>& a, const SpinVec<F>& b) {
    typename F::Elem ra = k.zero(), rb = k.zero();
    size_t i0 = a.size();
    for (size_t i = 0; i < a.size(); ++i) {
        bool za = k.is_zero(a[i]), zb = k.is_zero(b[i]);
        if (za != zb) return false;
        if (!za && i0 == a.size()) {
            i0 = i;
            ra = a[i];
            rb = b[i];
        }
    }
    if (i0 == a.size()) return true;
    for (size_t i = 0; i < a.size(); ++i)
        if (!k.eq(k.mul(a[i], rb), k.mul(b[i], ra))) return false;
    return true;
}

const std::vector<std::uint64_t> kF5Genus4{3, 1, 0, 2, 0, 0, 0, 0, 0, 1};

}  // namespace

TEST_CASE("identity divisor maps to the zero frame and to infinity") {
    PrimeField k(7);
    auto x = Poly<PrimeField>::x(k);
    auto f = x.shifted(4) + x + Poly<PrimeField>::constant(k, 3);
    QuadSpace<PrimeField> sp(Curve<PrimeField>::make(k, f));
    SpinIndex si(2);
    auto id = jacobian_identity(sp.curve());
    auto fr = mumford_to_frame(sp, id);
    CHECK(fr.subset_mask == 0);
    for (auto& c : fr.xi) CHECK(k.is_zero(c));
    CHECK(fr.xi_mat.is_zero());
    CHECK(kummer_embed(sp, si, id) == spin_infinity(k, si));
}

TEST_CASE("golden: g=1 embedding is [1 : -u1], the x-coordinate map") {
    // With U = x - alpha we have u1 = -alpha, so the second coordinate is
    // -u1 = alpha, the classical degree-2 map to P^1. This is the g=1
    // instance of the general pattern [1 : -u1 : u2 : ...]; the frame entry
    // is xi_0 = -u1 by the same relation that gives xi_i = -u_{g-i} for all g.
    RationalField q;
    Rng rng(12);
    SpinIndex si(1);
    for (int t = 0; t < 10; ++t) {
        auto [curve, d] = random_curve_with_point(q, 1, 1, rng);
        QuadSpace<RationalField> sp(curve);
        auto fr = mumford_to_frame(sp, d);
        CHECK(fr.xi[0] == -d.U.coeff(0));
        auto s = kummer_embed(sp, si, d);
        mpq_class alpha = -d.U.coeff(0);  // U = x - alpha
        CHECK(s[0] == 1);
        CHECK(s[1] == alpha);
    }
}

TEST_CASE("golden: g=2 generic embedding is [1 : -u1 : u2 : -u2 v1 - v3]") {
    RationalField q;
    Rng rng(34);
    SpinIndex si(2);
    for (int t = 0; t < 12; ++t) {
        auto [curve, d] = random_curve_with_point(q, 2, 2, rng);
        QuadSpace<RationalField> sp(curve);
        auto fr = mumford_to_frame(sp, d);
        CHECK(fr.xi[0] == -d.U.coeff(0));  // -u2
        CHECK(fr.xi[1] == -d.U.coeff(1));  // -u1
        CHECK(fr.xi_mat.at(0, 1) == (d.U.coeff(0) * d.V.coeff(2) + d.V.coeff(0)) / 2);
        auto s = kummer_embed(sp, si, d);
        CHECK(s[0] == 1);
        CHECK(s[1] == -d.U.coeff(1));
        CHECK(s[2] == d.U.coeff(0));
        CHECK(s[3] == -(d.U.coeff(0) * d.V.coeff(2) + d.V.coeff(0)));
    }
}

TEST_CASE("golden: g=2 degree-1 embedding is [0 : 1 : -u1 : u1^2]") {
    RationalField q;
    Rng rng(56);
    SpinIndex si(2);
    for (int t = 0; t < 12; ++t) {
        auto [curve, d] = random_curve_with_point(q, 2, 1, rng);
        QuadSpace<RationalField> sp(curve);
        auto s = kummer_embed(sp, si, d);
        mpq_class u1 = d.U.coeff(0);
        CHECK(s[0] == 0);
        CHECK(s[1] == 1);
        CHECK(s[2] == -u1);
        CHECK(s[3] == u1 * u1);
    }
}

TEST_CASE("golden: g=5 generic frame entries") {
    RationalField q;
    Rng rng(78);
    SpinIndex si(5);
    for (int t = 0; t < 10; ++t) {
        auto [curve, d] = random_curve_with_point(q, 5, 5, rng);
        QuadSpace<RationalField> sp(curve);
        auto fr = mumford_to_frame(sp, d);
        // (xi_i) = (-u5, -u4, -u3, -u2, -u1)
        for (int i = 0; i < 5; ++i) CHECK(fr.xi[i] == -d.U.coeff(i));
        // xi_{01} = (2 r3 r5 + u5 v4 + u3 v6) / 2
        mpq_class r3 = d.R.coeff(2), r5 = d.R.coeff(0);
        mpq_class u5 = d.U.coeff(0), u3 = d.U.coeff(2);
        mpq_class v4 = d.V.coeff(2), v6 = d.V.coeff(0);
        CHECK(fr.xi_mat.at(0, 1) == (2 * r3 * r5 + u5 * v4 + u3 * v6) / 2);
        // xi_{04} = (u5 v1 + v6) / 2
        mpq_class v1 = d.V.coeff(5);
        CHECK(fr.xi_mat.at(0, 4) == (u5 * v1 + v6) / 2);
    }
}

TEST_CASE("paper golden: genus-4 F_5 point embeds to the displayed vector") {
    PrimeField k(5);
    auto curve = Curve<PrimeField>::make(k, Poly<PrimeField>(k, std::vector<std::uint64_t>(kF5Genus4)));
    QuadSpace<PrimeField> sp(curve);
    SpinIndex si(4);
    Poly<PrimeField> U(k, {3, 2, 1, 4, 1});
    Poly<PrimeField> V(k, {4, 2, 3, 0, 1, 1});
    Poly<PrimeField> R(k, {1, 1, 1, 3});
    auto d = validate_mumford(curve, U, V, R);
    auto s = kummer_embed(sp, si, d);
    std::vector<std::uint64_t> expect{1, 1, 1, 3, 3, 4, 2, 3, 4, 2, 0, 4, 1, 2, 1, 3};
    CHECK(s == expect);
}

TEST_CASE("embedding is even: Psi(D) = Psi(-D), and normalised at J") {
    PrimeField k(13);
    Rng rng(90);
    for (int g = 1; g <= 3; ++g) {
        SpinIndex si(g);
        for (int t = 0; t < 10; ++t) {
            int m = static_cast<int>(rng() % (g + 1));
            auto [curve, d] = random_curve_with_point(k, g, m, rng);
            QuadSpace<PrimeField> sp(curve);
            auto s1 = kummer_embed(sp, si, d);
            auto s2 = kummer_embed(sp, si, cantor_negate(curve, d));
            CHECK(s1 == s2);
            // coordinate at J is 1; coordinates at larger subsets vanish
            std::uint32_t jmask = m == 0 ? 0 : ((1u << m) - 1) << (g - m);
            CHECK(k.is_one(s1[si.position(jmask)]));
            for (std::uint32_t ppos = 0; ppos < si.dim(); ++ppos)
                if (__builtin_popcount(si.subset_at(ppos)) > m) CHECK(k.is_zero(s1[ppos]));
        }
    }
}

TEST_CASE("integral triples give integral coordinates") {
    RationalField q;
    Rng rng(41);
    SpinIndex si(3);
    for (int t = 0; t < 8; ++t) {
        // integer Mumford data
        int g = 3, m = 3;
        std::vector<mpq_class> uc{mpq_class(rng() % 7) - 3, mpq_class(rng() % 7) - 3, mpq_class(rng() % 7) - 3,
                                  mpq_class(1)};
        std::vector<mpq_class> vc;
        for (int i = 0; i < 2 * g + 1 - m; ++i) vc.push_back(mpq_class(rng() % 7) - 3);
        vc.push_back(mpq_class(1));
        std::vector<mpq_class> rc;
        for (int i = 0; i < m; ++i) rc.push_back(mpq_class(rng() % 7) - 3);
        Poly<RationalField> U(q, std::move(uc)), V(q, std::move(vc)), R(q, std::move(rc));
        Poly<RationalField> f = U * V + R * R;
        if (q.is_zero(poly_discriminant(f))) continue;
        QuadSpace<RationalField> sp(Curve<RationalField>::make(q, f));
        auto s = kummer_embed(sp, si, validate_mumford(sp.curve(), U, V, R));
        for (const auto& c : s) CHECK(c.get_den() == 1);
    }
}

TEST_CASE("membership: infinity, embedded points, and random non-pure vectors") {
    PrimeField k(13);
    auto x = Poly<PrimeField>::x(k);
    auto f = x.shifted(4) + x + Poly<PrimeField>::constant(k, 1);
    QuadSpace<PrimeField> sp(Curve<PrimeField>::make(k, f));
    SpinIndex si(2);
    auto inf = spin_infinity(k, si);
    auto verdict = kummer_membership(sp, si, inf);
    CHECK(verdict.on_kummer);
    CHECK(verdict.rank == 0);
    CHECK(verdict.lifts);

    Rng rng(17);
    // all embedded points pass with rank <= 1 and lift
    auto pts = enumerate_points(sp.curve());
    for (const auto& p : pts) {
        auto s = kummer_embed(sp, si, p);
        auto v = kummer_membership(sp, si, s);
        CHECK(v.on_kummer);
        CHECK(v.rank <= 1);
        CHECK(v.lifts);
    }
    // random vectors are overwhelmingly non-pure; resample on accidental hits
    int rejected = 0;
    for (int t = 0; t < 40; ++t) {
        SpinVec<PrimeField> s(si.dim());
        bool nonzero = false;
        for (auto& c : s) {
            c = k.random(rng);
            nonzero |= !k.is_zero(c);
        }
        if (!nonzero) continue;
        auto v = kummer_membership(sp, si, s);
        if (!v.on_kummer) ++rejected;
    }
    CHECK(rejected >= 35);
}

TEST_CASE("lift verdict matches brute-force enumeration over small fields") {
    // scaling an embedded point by a non-square can break liftability
    // (rank-1 case); verify against the enumerated image set
    PrimeField k(11);
    auto x = Poly<PrimeField>::x(k);
    auto f = x * x * x + x.scaled(4) + Poly<PrimeField>::constant(k, 1);
    auto curve = Curve<PrimeField>::make(k, f);
    QuadSpace<PrimeField> sp(curve);
    SpinIndex si(1);
    auto pts = enumerate_points(curve);
    std::vector<SpinVec<PrimeField>> images;
    for (const auto& p : pts) images.push_back(kummer_embed(sp, si, p));

    Rng rng(3);
    int lift_yes = 0, lift_no = 0;
    for (int t = 0; t < 200; ++t) {
        SpinVec<PrimeField> s(si.dim());
        bool nonzero = false;
        for (auto& c : s) {
            c = k.random(rng);
            nonzero |= !k.is_zero(c);
        }
        if (!nonzero) continue;
        auto v = kummer_membership(sp, si, s);
        bool has_preimage = false;
        for (const auto& img : images)
            if (proportional(k, s, img)) has_preimage = true;
        if (v.on_kummer) {
            CHECK(v.lifts == has_preimage);
            (v.lifts ? lift_yes : lift_no)++;
        } else {
            CHECK(!has_preimage);
        }
    }
    // for g=1 every nonzero vector of P^1 is on the Kummer; both verdicts occur
    CHECK(lift_yes > 0);
    CHECK(lift_no > 0);
}

TEST_CASE("injectivity on the Kummer: equal images exactly for D and -D") {
    PrimeField k(7);
    auto x = Poly<PrimeField>::x(k);
    auto f = x.shifted(4) + x.scaled(2) + Poly<PrimeField>::constant(k, 1);
    if (k.is_zero(poly_discriminant(f))) f = x.shifted(4) + x + Poly<PrimeField>::constant(k, 3);
    auto curve = Curve<PrimeField>::make(k, f);
    QuadSpace<PrimeField> sp(curve);
    SpinIndex si(2);
    auto pts = enumerate_points(curve);
    std::vector<SpinVec<PrimeField>> images;
    for (const auto& p : pts) images.push_back(kummer_embed(sp, si, p));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i; j < pts.size(); ++j) {
            bool same_class = pts[j] == pts[i] || pts[j] == cantor_negate(curve, pts[i]);
            CHECK(proportional(k, images[i], images[j]) == same_class);
        }
}

TEST_CASE("rank condition holds on every embedded point (Gram of <a, xb>)") {
    PrimeField k(11);
    Rng rng(29);
    for (int g = 1; g <= 3; ++g) {
        SpinIndex si(g);
        for (int t = 0; t < 8; ++t) {
            int m = static_cast<int>(rng() % (g + 1));
            auto [curve, d] = random_curve_with_point(k, g, m, rng);
            QuadSpace<PrimeField> sp(curve);
            auto v = kummer_membership(sp, si, kummer_embed(sp, si, d));
            CHECK(v.on_kummer);
            CHECK(v.rank <= 1);
            CHECK(v.lifts);
        }
    }
}

TEST_CASE("genus-2 quartic vanishes on embedded points; selected coefficients") {
    PrimeField k(101);
    Rng rng(61);
    SpinIndex si(2);
    for (int t = 0; t < 50; ++t) {
        auto [curve, d] = random_curve_with_point(k, 2, 2, rng);
        QuadSpace<PrimeField> sp(curve);
        auto quartic = kummer_quartic_g2(curve);
        auto s = kummer_embed(sp, si, d);
        CHECK(k.is_zero(quartic.eval(s)));
        // x1^4 coefficient is c4^2 - 4 c3 c5; x3^4 coefficient is 1
        auto c3 = curve.f.coeff(2), c4 = curve.f.coeff(1), c5 = curve.f.coeff(0);
        CHECK(quartic.coeff(Monomial{4, 0, 0, 0}) ==
              k.sub(k.mul(c4, c4), k.mul(k.from_int(4), k.mul(c3, c5))));
        CHECK(quartic.coeff(Monomial{0, 0, 4, 0}) == k.one());
    }
    RationalField q;
    auto xq = Poly<RationalField>::x(q);
    CHECK_THROWS_AS(kummer_quartic_g2(Curve<RationalField>::make(q, xq * xq * xq + xq + Poly<RationalField>::one(q))),
                    MathError);
}
