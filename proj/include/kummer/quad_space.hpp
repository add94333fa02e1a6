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

// The odd hyperelliptic curve y^2 = f(x) and its quadratic space
// V = k[x]/(f) with the bilinear form <a,b> = (coefficient of x^{2g} in ab).
//
// V carries two bases: the power basis 1, x, ..., x^{2g} and the straightened
// basis q_0, ..., q_{2g}, the unique refinement with q_i = x^i for i <= g and
// antidiagonal Gram matrix. Vectors are tagged with their basis so the two
// coordinate systems cannot be mixed silently.

#ifndef KUMMER_QUAD_SPACE_HPP
#define KUMMER_QUAD_SPACE_HPP

#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/matrix.hpp"
#include "kummer/poly.hpp"

namespace kummer {

template <class F>
struct Curve {
    F field;
    int g;           // genus, deg f = 2g+1
    Poly<F> f;       // monic, squarefree
    typename F::Elem disc;

    static Curve make(const F& field, const Poly<F>& f) {
        if (f.degree() < 3 || f.degree() % 2 == 0)
            throw MathError("curve polynomial must be monic of odd degree >= 3");
        if (!f.is_monic()) throw MathError("curve polynomial must be monic");
        typename F::Elem disc = poly_discriminant(f);
        if (field.is_zero(disc)) throw MathError("zero discriminant");
        return Curve{field, (f.degree() - 1) / 2, f, std::move(disc)};
    }
};

enum class VBasis { Power, Straightened };

template <class F>
struct VElem {
    VBasis basis;
    std::vector<typename F::Elem> coords;  // length 2g+1
};

template <class F>
class QuadSpace {
public:
    using Elem = typename F::Elem;

    // The bypass_validation escape hatch exists for formula unit tests on
    // degenerate data (all c_i = 0) and is not reachable from any public
    // construction path.
    explicit QuadSpace(Curve<F> curve)
        : curve_(std::move(curve)),
          straight_to_power_(make_basis(curve_)),
          power_to_straight_(matrix_inverse(straight_to_power_)) {}
    struct unchecked_tag {};
    QuadSpace(const F& field, const Poly<F>& f, unchecked_tag)
        : curve_{field, (f.degree() - 1) / 2, f, field.zero()},
          straight_to_power_(make_basis(curve_)),
          power_to_straight_(matrix_inverse(straight_to_power_)) {}

    const Curve<F>& curve() const { return curve_; }
    const F& field() const { return curve_.field; }
    int g() const { return curve_.g; }
    int dim() const { return 2 * curve_.g + 1; }

    // column j holds the power-basis coordinates of q_j
    const Matrix<F>& straightened_to_power() const { return straight_to_power_; }
    const Matrix<F>& power_to_straightened() const { return power_to_straight_; }

    VElem<F> from_poly(const Poly<F>& a) const {
        Poly<F> r = poly_divmod(a, curve_.f).second;
        std::vector<Elem> c(dim(), field().zero());
        for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
        return {VBasis::Power, std::move(c)};
    }
    Poly<F> to_poly(const VElem<F>& v) const {
        return Poly<F>(field(), std::vector<Elem>(to_power(v).coords));
    }

    VElem<F> to_power(const VElem<F>& v) const {
        if (v.basis == VBasis::Power) return v;
        return {VBasis::Power, straight_to_power_.apply(v.coords)};
    }
    VElem<F> to_straightened(const VElem<F>& v) const {
        if (v.basis == VBasis::Straightened) return v;
        return {VBasis::Straightened, power_to_straight_.apply(v.coords)};
    }

    // the straightened basis vector q_i
    VElem<F> basis_vector(int i) const {
        std::vector<Elem> c(dim(), field().zero());
        c[i] = field().one();
        return {VBasis::Straightened, std::move(c)};
    }

    // <a,b> = coefficient of x^{2g} in a*b mod f
    Elem form(const VElem<F>& a, const VElem<F>& b) const {
        Poly<F> prod = to_poly(a) * to_poly(b);
        Poly<F> r = poly_divmod(prod, curve_.f).second;
        return r.coeff(2 * curve_.g);
    }

    // multiplication by x as an endomorphism of V (both bases)
    VElem<F> times_x(const VElem<F>& v) const {
        VBasis orig = v.basis;
        Poly<F> shifted = to_poly(v).shifted(1);
        VElem<F> r = from_poly(shifted);
        return orig == VBasis::Power ? r : to_straightened(r);
    }

private:
    Curve<F> curve_;
    Matrix<F> straight_to_power_;
    Matrix<F> power_to_straight_;

    // q_i = x^i for 0 <= i <= g;
    // q_{g+i} = x^{g+i} + c_1 x^{g+i-1} + ... + c_{2i-1} x^{g-i+1} + (1/2) c_{2i} x^{g-i}
    static Matrix<F> make_basis(const Curve<F>& curve) {
        const F& k = curve.field;
        const int g = curve.g;
        const int n = 2 * g + 1;
        Elem half = k.inv(k.from_int(2));
        Matrix<F> m(k, n, n);
        for (int i = 0; i <= g; ++i) m.at(i, i) = k.one();
        for (int i = 1; i <= g; ++i) {
            m.at(g + i, g + i) = k.one();
            // c_j is the coefficient of x^{2g+1-j} in f
            for (int j = 1; j <= 2 * i - 1; ++j) m.at(g + i - j, g + i) = curve.f.coeff(n - j);
            m.at(g - i, g + i) = k.mul(half, curve.f.coeff(n - 2 * i));
        }
        return m;
    }
};

}  // namespace kummer

#endif
