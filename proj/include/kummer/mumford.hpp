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

// Mumford representation of Jacobian points and Cantor's group law.
//
// A point is a triple (U, V, R): U monic of degree m <= g, V monic of degree
// 2g+1-m, deg R <= m-1, and f - R^2 = U V. The divisor is cut out by
// U(x) = 0, y = R(x). Cantor's algorithm below is deliberately independent of
// the spinor machinery: it is the oracle everything else is tested against.

#ifndef KUMMER_MUMFORD_HPP
#define KUMMER_MUMFORD_HPP

#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/poly.hpp"
#include "kummer/quad_space.hpp"

namespace kummer {

template <class F>
struct Mumford {
    Poly<F> U, V, R;

    int degree() const { return U.degree(); }  // the Mumford degree m

    bool operator==(const Mumford& o) const { return U == o.U && V == o.V && R == o.R; }
    bool operator!=(const Mumford& o) const { return !(*this == o); }
};

template <class F>
Mumford<F> validate_mumford(const Curve<F>& curve, const Poly<F>& U, const Poly<F>& V, const Poly<F>& R) {
    const int g = curve.g;
    if (U.is_zero() || !U.is_monic()) throw MathError("U must be monic");
    if (V.is_zero() || !V.is_monic()) throw MathError("V must be monic");
    int m = U.degree();
    if (m > g) throw MathError("deg U must be at most g");
    if (V.degree() != 2 * g + 1 - m) throw MathError("deg V must be 2g+1-deg U");
    if (R.degree() > m - 1) throw MathError("deg R must be below deg U");
    if (curve.f - R * R != U * V) throw MathError("triple fails f - R^2 = U V");
    return Mumford<F>{U, V, R};
}

template <class F>
Mumford<F> jacobian_identity(const Curve<F>& curve) {
    const F& k = curve.field;
    return Mumford<F>{Poly<F>::one(k), curve.f, Poly<F>::zero(k)};
}

// Normalises a pair (U, R) with U | f - R^2 into a full validated triple.
template <class F>
Mumford<F> mumford_from_ur(const Curve<F>& curve, Poly<F> U, Poly<F> R) {
    U = U.monic();
    R = poly_divmod(R, U).second;
    Poly<F> V = poly_exact_div(curve.f - R * R, U);
    return Mumford<F>{std::move(U), V.monic(), std::move(R)};
}

template <class F>
Mumford<F> cantor_negate(const Curve<F>& curve, const Mumford<F>& d) {
    return mumford_from_ur(curve, d.U, -d.R);
}

// Cantor composition + reduction. Handles all cases, including non-coprime
// supports and ramification.
template <class F>
Mumford<F> cantor_add(const Curve<F>& curve, const Mumford<F>& d1, const Mumford<F>& d2) {
    const F& k = curve.field;
    const int g = curve.g;
    const Poly<F>& f = curve.f;

    // composition
    auto [g1, e1, e2] = poly_xgcd(d1.U, d2.U);           // g1 = e1 U1 + e2 U2
    Poly<F> rsum = d1.R + d2.R;
    auto [d, c1, c2] = poly_xgcd(g1, rsum);              // d = c1 g1 + c2 (R1+R2)
    // d = s1 U1 + s2 U2 + s3 (R1 + R2)
    Poly<F> s1 = c1 * e1, s2 = c1 * e2, s3 = c2;

    Poly<F> U = poly_exact_div(d1.U * d2.U, d * d);
    // R = (s1 U1 R2 + s2 U2 R1 + s3 (R1 R2 + f)) / d  mod U
    Poly<F> num = s1 * d1.U * d2.R + s2 * d2.U * d1.R + s3 * (d1.R * d2.R + f);
    Poly<F> R = poly_divmod(poly_exact_div(num, d), U.monic()).second;
    U = U.monic();

    // reduction
    while (U.degree() > g) {
        Poly<F> Unext = poly_exact_div(f - R * R, U).monic();
        R = poly_divmod(-R, Unext).second;
        U = std::move(Unext);
    }
    (void)k;
    return mumford_from_ur(curve, U, R);
}

template <class F>
Mumford<F> cantor_double(const Curve<F>& curve, const Mumford<F>& d) {
    return cantor_add(curve, d, d);
}

template <class F>
Mumford<F> cantor_mul(const Curve<F>& curve, const Mumford<F>& d, long n) {
    Mumford<F> acc = jacobian_identity(curve);
    Mumford<F> base = d;
    bool negaten = n < 0;
    unsigned long e = negaten ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) acc = cantor_add(curve, acc, base);
        e >>= 1;
        if (e) base = cantor_double(curve, base);
    }
    return negaten ? cantor_negate(curve, acc) : acc;
}

// The 2-torsion divisor supported on the Weierstrass roots indexed by I
// (indices into `roots`, 0-based). Canonicalises to |I| <= g by passing to
// the complement when needed.
template <class F>
Mumford<F> two_torsion_divisor(const Curve<F>& curve, const std::vector<typename F::Elem>& roots,
                               std::vector<int> I) {
    const F& k = curve.field;
    const int n = 2 * curve.g + 1;
    internal_check(static_cast<int>(roots.size()) == n, "need all 2g+1 roots");
    if (static_cast<int>(I.size()) > curve.g) {
        std::vector<char> in(n, 0);
        for (int i : I) in[i] = 1;
        std::vector<int> comp;
        for (int i = 0; i < n; ++i)
            if (!in[i]) comp.push_back(i);
        I = std::move(comp);
    }
    Poly<F> U = Poly<F>::one(k);
    for (int i : I) U = U * (Poly<F>::x(k) - Poly<F>::constant(k, roots[i]));
    return mumford_from_ur(curve, U, Poly<F>::zero(k));
}

// Complete enumeration of J(F_p) by brute force over Mumford triples.
// Guarded: requires p^{2g} <= 10^7.
inline std::vector<Mumford<PrimeField>> enumerate_points(const Curve<PrimeField>& curve) {
    const PrimeField& k = curve.field;
    const int g = curve.g;
    double budget = 1.0;
    for (int i = 0; i < 2 * g; ++i) budget *= static_cast<double>(k.p());
    if (budget > 1e7) throw MathError("enumeration budget exceeded (p^{2g} > 10^7)");

    std::vector<Mumford<PrimeField>> points;
    points.push_back(jacobian_identity(curve));
    for (int m = 1; m <= g; ++m) {
        // all monic U of degree m and all R of degree <= m-1 with U | f - R^2
        std::vector<std::uint64_t> uc(m, 0);
        while (true) {
            std::vector<std::uint64_t> ucoeffs(uc);
            ucoeffs.push_back(1);
            Poly<PrimeField> U(k, std::move(ucoeffs));
            std::vector<std::uint64_t> rc(m, 0);
            while (true) {
                Poly<PrimeField> R(k, std::vector<std::uint64_t>(rc));
                if (poly_divmod(curve.f - R * R, U).second.is_zero())
                    points.push_back(mumford_from_ur(curve, U, R));
                int i = 0;
                while (i < m && ++rc[i] == k.p()) rc[i++] = 0;
                if (i == m) break;
            }
            int i = 0;
            while (i < m && ++uc[i] == k.p()) uc[i++] = 0;
            if (i == m) break;
        }
    }
    return points;
}

}  // namespace kummer

#endif
