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

// The Kummer embedding: Mumford triple -> isotropic frame -> pure spinor in
// P^{2^g-1}, together with the image membership test and lifting criterion.

#ifndef KUMMER_KUMMER_MAP_HPP
#define KUMMER_KUMMER_MAP_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/multipoly.hpp"
#include "kummer/mumford.hpp"
#include "kummer/spinor.hpp"

namespace kummer {

// Frame of the isotropic subspace attached to a Mumford triple of degree m.
// The marked subset is J = {2g, ..., 2g-m+1}; by construction the subspace is
// spanned by x^i U (i < g-m) and -2 x^i V + a_i + q_i R (i < m), where
// x^i V = p_i U + a_i and -2 x^i R = q_i U + b_i by division against U.
template <class F>
IsotropicFrame<F> mumford_to_frame(const QuadSpace<F>& space, const Mumford<F>& d) {
    const F& k = space.field();
    const int g = space.g();
    const int m = d.degree();
    internal_check(m <= g, "Mumford degree exceeds genus");

    IsotropicFrame<F> frame(k, g);
    frame.subset_mask = m == 0 ? 0 : (((1u << m) - 1) << (g - m));

    if (m == 0 && g == 0) return frame;

    // spanning vectors in straightened coordinates
    Matrix<F> rows(k, g, 2 * g + 1);
    int r = 0;
    for (int i = 0; i + m < g; ++i, ++r) {
        VElem<F> w = space.to_straightened(space.from_poly(d.U.shifted(i)));
        for (int c = 0; c < 2 * g + 1; ++c) rows.at(r, c) = w.coords[c];
    }
    typename F::Elem minus_two = k.neg(k.from_int(2));
    for (int i = 0; i < m; ++i, ++r) {
        Poly<F> xiV = d.V.shifted(i);
        Poly<F> a_i = poly_divmod(xiV, d.U).second;
        Poly<F> q_i = poly_divmod(d.R.shifted(i).scaled(minus_two), d.U).first;
        Poly<F> z = xiV.scaled(minus_two) + a_i + q_i * d.R;
        VElem<F> w = space.to_straightened(space.from_poly(z));
        for (int c = 0; c < 2 * g + 1; ++c) rows.at(r, c) = w.coords[c];
    }

    // normalise to the basis l_{2g}, ..., l_{g+1}: identity block on the
    // primed high-slot columns
    Matrix<F> block(k, g, g);
    for (int rr = 0; rr < g; ++rr)
        for (int t = 0; t < g; ++t) {
            int j = 2 * g - t;  // high slot element
            int col = (frame.subset_mask >> (g - 1 - t) & 1) ? j : 2 * g - j;
            block.at(rr, t) = rows.at(rr, col);
        }
    Matrix<F> l(k, 0, 0);
    try {
        l = matrix_inverse(block) * rows;
    } catch (const MathError&) {
        throw InternalError("frame pivot block is singular");
    }

    for (int t = 0; t < g; ++t) frame.xi[t] = l.at(t, g);
    typename F::Elem half = k.inv(k.from_int(2));
    Matrix<F> a_mat(k, g, g);
    for (int i = 0; i < g; ++i)
        for (int t = 0; t < g; ++t) a_mat.at(i, t) = l.at(t, primed_low_index(g, frame.subset_mask, i));
    for (int i = 0; i < g; ++i)
        for (int t = 0; t < g; ++t)
            frame.xi_mat.at(i, t) = k.add(a_mat.at(i, t), k.mul(half, k.mul(frame.xi[i], frame.xi[t])));
    for (int i = 0; i < g; ++i)
        for (int t = 0; t <= i; ++t)
            internal_check(k.is_zero(k.add(frame.xi_mat.at(i, t), frame.xi_mat.at(t, i))),
                           "frame matrix is not antisymmetric");
    return frame;
}

// The point of P(S) = P^{2^g-1} attached to a divisor class, normalised so
// the coordinate at the marked subset J equals 1 (first nonzero coordinate).
template <class F>
SpinVec<F> kummer_embed(const QuadSpace<F>& space, const SpinIndex& si, const Mumford<F>& d) {
    return pure_spinor(space.field(), si, mumford_to_frame(space, d));
}

/* -------------------------------------------------- membership & lift --- */

template <class F>
struct Membership {
    bool on_kummer = false;
    int rank = -1;                     // 0 or 1 when on the Kummer
    bool lifts = false;                // lifts to a Jacobian point over the base field
    std::optional<typename F::Elem> lambda;  // rank-1 obstruction class, modulo squares
};

// Decides whether a nonzero spin vector lies on the Kummer image: its
// annihilator must be g-dimensional (a pure spinor) and the form
// (a, b) -> <a, x b> restricted to that subspace must have rank <= 1.
// Rank 0 always lifts; rank 1 lifts exactly when lambda is a square.
template <class F>
Membership<F> kummer_membership(const QuadSpace<F>& space, const SpinIndex& si, const SpinVec<F>& s) {
    const F& k = space.field();
    const int g = space.g();
    Membership<F> out;
    bool nonzero = false;
    for (const auto& c : s)
        if (!k.is_zero(c)) nonzero = true;
    if (!nonzero) throw MathError("membership test needs a nonzero vector");

    Matrix<F> l = annihilator(k, si, s);
    if (l.rows() != g) return out;  // not a pure spinor
    // Gram of <a, x b> on the annihilator
    std::vector<VElem<F>> basis;
    for (int i = 0; i < g; ++i) {
        std::vector<typename F::Elem> coords(2 * g + 1);
        for (int c = 0; c < 2 * g + 1; ++c) coords[c] = l.at(i, c);
        basis.push_back(VElem<F>{VBasis::Straightened, std::move(coords)});
    }
    Matrix<F> gram(k, g, g);
    for (int i = 0; i < g; ++i) {
        VElem<F> xb = space.times_x(basis[i]);
        for (int j = 0; j < g; ++j) gram.at(j, i) = space.form(basis[j], xb);
    }
    int rank = matrix_rank(gram);
    if (rank > 1) return out;
    out.on_kummer = true;
    out.rank = rank;
    if (rank == 0) {
        out.lifts = true;
        return out;
    }
    // a nonzero symmetric rank-1 matrix is lambda v v^t; any nonzero diagonal
    // entry represents lambda modulo squares. With the normalisations fixed
    // here, points that lift carry the class of -1 (checked against the
    // enumeration oracle over several fields), so the verdict tests -lambda.
    for (int i = 0; i < g; ++i) {
        if (!k.is_zero(gram.at(i, i))) {
            out.lambda = gram.at(i, i);
            out.lifts = k.is_square(k.neg(*out.lambda));
            return out;
        }
    }
    throw InternalError("rank-1 symmetric Gram with zero diagonal");
}

/* --------------------------------------------------- genus-2 quartic --- */

// Ring adapter: multivariate polynomials over Q presented through the field
// interface. Division is only defined by nonzero constants, which is all the
// quartic computation needs.
class SymbolicRing {
public:
    using Elem = MultiPoly<RationalField>;

    explicit SymbolicRing(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    Elem zero() const { return Elem(RationalField{}, nvars_); }
    Elem one() const { return from_int(1); }
    Elem from_int(long n) const { return Elem::constant(RationalField{}, nvars_, mpq_class(n)); }
    Elem variable(int i) const { return Elem::variable(RationalField{}, nvars_, i, mpq_class(1)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a.term_count() != 1) throw MathError("symbolic division by a non-constant");
        const auto& [m, c] = *a.terms().begin();
        for (auto e : m)
            if (e) throw MathError("symbolic division by a non-constant");
        return Elem::constant(RationalField{}, nvars_, mpq_class(1) / c);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const {
        return a.term_count() == 1 && a.coeff(Monomial(nvars_, 0)) == 1;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const {
        std::vector<std::string> names;
        for (int i = 0; i < nvars_; ++i) names.push_back("t" + std::to_string(i));
        return a.str(names);
    }
    bool same(const SymbolicRing& o) const { return nvars_ == o.nvars_; }

private:
    int nvars_;
};

// The genus-2 Kummer surface quartic, fully symbolic over Q in the variables
// [c1..c5, x1..x4] (nine variables, c's first). Derived from the rank
// condition: the determinant of the 2x2 Gram of <a, x b> on the generic
// isotropic subspace, homogenised to P^3.
MultiPoly<RationalField> kummer_quartic_g2_symbolic();

// The quartic for a concrete genus-2 curve, in the variables x1..x4.
template <class F>
MultiPoly<F> kummer_quartic_g2(const Curve<F>& curve) {
    if (curve.g != 2) throw MathError("the explicit Kummer quartic requires genus 2");
    const F& k = curve.field;
    static const MultiPoly<RationalField> sym = kummer_quartic_g2_symbolic();
    MultiPoly<F> out(k, 4);
    for (const auto& [mon, coeff] : sym.terms()) {
        // substitute c-values (first five variables), keep x1..x4
        typename F::Elem c = k.from_mpq(coeff);
        for (int i = 0; i < 5; ++i) {
            // c_{i+1} is the coefficient of x^{4-i} in f = x^5 + c1 x^4 + ... + c5
            typename F::Elem ci = curve.f.coeff(4 - i);
            for (int e = 0; e < mon[i]; ++e) c = k.mul(c, ci);
        }
        Monomial xmon(4, 0);
        for (int i = 0; i < 4; ++i) xmon[i] = mon[5 + i];
        out.add_term(xmon, c);
    }
    return out;
}

}  // namespace kummer

#endif
