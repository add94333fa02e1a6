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

#include "kummer/kummer_map.hpp"

namespace kummer {

// Symbolic derivation of the genus-2 Kummer quartic over Q[c1..c5].
//
// Work in the ring Q[c1..c5, xi0, xi1, xi01] (eight variables). The generic
// isotropic plane is spanned by
//   l4 = q4 + xi0 q2 - (1/2) xi0^2 q0 - (xi01 + (1/2) xi0 xi1) q1,
//   l3 = q3 + xi1 q2 + (xi01 - (1/2) xi0 xi1) q0 - (1/2) xi1^2 q1,
// and the Kummer is the vanishing of det <l_a, x l_b>. Substituting the
// affine chart xi0 = -x3/x1, xi1 = x2/x1, xi01 = -(1/2) x4/x1 and clearing
// x1^4 yields the quartic.
MultiPoly<RationalField> kummer_quartic_g2_symbolic() {
    const int g = 2;
    SymbolicRing ring(8);  // c1..c5 (0..4), xi0 (5), xi1 (6), xi01 (7)
    RationalField q;

    // f = x^5 + c1 x^4 + ... + c5 over the symbolic ring
    std::vector<SymbolicRing::Elem> fc;
    for (int i = 0; i < 5; ++i) fc.push_back(ring.variable(4 - i));  // c5, c4, c3, c2, c1
    fc.push_back(ring.one());
    Poly<SymbolicRing> f(ring, std::move(fc));
    QuadSpace<SymbolicRing> space(ring, f, QuadSpace<SymbolicRing>::unchecked_tag{});

    SymbolicRing::Elem xi0 = ring.variable(5), xi1 = ring.variable(6), xi01 = ring.variable(7);
    SymbolicRing::Elem half = ring.inv(ring.from_int(2));

    // rows of the generic plane in straightened coordinates
    auto make_l = [&](int t) {  // t = 0 -> l4, t = 1 -> l3
        std::vector<SymbolicRing::Elem> v(2 * g + 1, ring.zero());
        const SymbolicRing::Elem& xi_t = (t == 0) ? xi0 : xi1;
        v[4 - t] = ring.one();
        v[g] = xi_t;
        // A_{i t} = xi_{i t} - (1/2) xi_i xi_t
        SymbolicRing::Elem a0t = (t == 0) ? ring.neg(ring.mul(half, ring.mul(xi0, xi0)))
                                          : ring.sub(xi01, ring.mul(half, ring.mul(xi0, xi1)));
        SymbolicRing::Elem a1t = (t == 0) ? ring.sub(ring.neg(xi01), ring.mul(half, ring.mul(xi1, xi0)))
                                          : ring.neg(ring.mul(half, ring.mul(xi1, xi1)));
        v[0] = a0t;
        v[1] = a1t;
        return VElem<SymbolicRing>{VBasis::Straightened, std::move(v)};
    };
    VElem<SymbolicRing> l4 = make_l(0), l3 = make_l(1);

    VElem<SymbolicRing> xl4 = space.times_x(l4), xl3 = space.times_x(l3);
    SymbolicRing::Elem g00 = space.form(l4, xl4);
    SymbolicRing::Elem g01 = space.form(l4, xl3);
    SymbolicRing::Elem g10 = space.form(l3, xl4);
    SymbolicRing::Elem g11 = space.form(l3, xl3);
    SymbolicRing::Elem det = ring.sub(ring.mul(g00, g11), ring.mul(g01, g10));

    // substitute the chart and clear x1^4: monomial xi0^a xi1^b xi01^c maps to
    // (-1)^{a+c} (1/2)^c x3^a x2^b x4^c x1^{4-a-b-c}
    // scaled by -4 so that the x3^4 coefficient equals 1
    MultiPoly<RationalField> out(q, 9);  // c1..c5, x1..x4
    for (const auto& [mon, coeff] : det.terms()) {
        int a = mon[5], b = mon[6], c = mon[7];
        int deg = a + b + c;
        internal_check(deg <= 4, "chart degree exceeds 4");
        Monomial m(9, 0);
        for (int i = 0; i < 5; ++i) m[i] = mon[i];
        m[5] = static_cast<std::uint8_t>(4 - deg);  // x1
        m[6] = static_cast<std::uint8_t>(b);        // x2
        m[7] = static_cast<std::uint8_t>(a);        // x3
        m[8] = static_cast<std::uint8_t>(c);        // x4
        mpq_class val = coeff * -4;
        if ((a + c) % 2 == 1) val = -val;
        for (int e = 0; e < c; ++e) val /= 2;
        out.add_term(m, val);
    }
    return out;
}

}  // namespace kummer
