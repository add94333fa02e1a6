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

// The 2^g-dimensional spin representation of the rank-(2g+1) split quadratic
// space, in the basis of wedge monomials q_I indexed by subsets
// I of {g+1, ..., 2g}.
//
// Conventions (fixed once, used everywhere):
//  * A subset I is a bitmask; bit b stands for the element g+1+b.
//  * Monomials are wedges written in descending index order,
//    q_I = q_{i_r} ^ ... ^ q_{i_1} with i_1 < ... < i_r.
//  * Coordinate order: I comes before J when |I| > |J|, or when |I| = |J| and
//    the largest element of the symmetric difference lies in I. The first
//    coordinate is the full set, the last is the empty set; the vector
//    "infinity" = (0, ..., 0, 1) spans the image of the identity of the
//    Jacobian under the Kummer embedding.
//  * Basis vectors q_i of V act by: wedge (i > g), contraction with a factor
//    of 2 (i < g), and the parity sign (i = g).

#ifndef KUMMER_SPINOR_HPP
#define KUMMER_SPINOR_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/matrix.hpp"
#include "kummer/quad_space.hpp"

namespace kummer {

// Precomputed index tables for one value of g. Cheap to build; build once and
// reuse when convenient.
class SpinIndex {
public:
    explicit SpinIndex(int g) : g_(g) {
        internal_check(g >= 1 && g <= 20, "genus out of range");
        const std::uint32_t n = 1u << g;
        order_.resize(n);
        for (std::uint32_t m = 0; m < n; ++m) order_[m] = m;
        // larger size first; within a size, reverse lexicographic: the subset
        // missing the smallest differing element comes first (this is grevlex
        // on wedge monomials with q_{2g} > ... > q_{g+1}, and matches the
        // genus-2 order {43} > {4} > {3} > {})
        std::sort(order_.begin(), order_.end(), [](std::uint32_t a, std::uint32_t b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            if (pa != pb) return pa > pb;
            std::uint32_t x = a ^ b;
            if (x == 0) return false;
            return (b & (x & ~(x - 1))) != 0;
        });
        pos_.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) pos_[order_[i]] = i;
        beta_sign_.resize(n);
        for (std::uint32_t m = 0; m < n; ++m) beta_sign_[m] = beta_monomial_sign(m);
    }

    int g() const { return g_; }
    std::uint32_t dim() const { return 1u << g_; }
    std::uint32_t full_mask() const { return (1u << g_) - 1; }
    // mask of the subset at coordinate position i
    std::uint32_t subset_at(std::uint32_t i) const { return order_[i]; }
    // coordinate position of a subset mask
    std::uint32_t position(std::uint32_t mask) const { return pos_[mask]; }
    // sign of beta(q_I, q_{I^c}); beta vanishes on all other monomial pairs
    int beta_sign(std::uint32_t mask) const { return beta_sign_[mask]; }

private:
    int g_;
    std::vector<std::uint32_t> order_, pos_;
    std::vector<int> beta_sign_;

    // beta(q_I, q_J) with J = I^c equals (-1)^{s(s+1)/2} eps(sigma), where
    // s = |J| and sigma sorts the word (I descending, J descending) into
    // descending order.
    int beta_monomial_sign(std::uint32_t mask_i) const {
        std::uint32_t mask_j = full_mask() & ~mask_i;
        std::vector<int> word;
        for (int b = g_ - 1; b >= 0; --b)
            if (mask_i >> b & 1) word.push_back(b);
        for (int b = g_ - 1; b >= 0; --b)
            if (mask_j >> b & 1) word.push_back(b);
        int inversions = 0;
        for (size_t a = 0; a < word.size(); ++a)
            for (size_t b = a + 1; b < word.size(); ++b)
                if (word[a] < word[b]) ++inversions;
        int s = __builtin_popcount(mask_j);
        int sign = (inversions % 2 == 0) ? 1 : -1;
        if ((s * (s + 1) / 2) % 2 == 1) sign = -sign;
        return sign;
    }
};

// Spin vectors are plain coordinate vectors of length 2^g in the canonical
// coordinate order of SpinIndex.
template <class F>
using SpinVec = std::vector<typename F::Elem>;

template <class F>
SpinVec<F> spin_zero(const F& k, const SpinIndex& si) {
    return SpinVec<F>(si.dim(), k.zero());
}

// the identity image: coordinate 1 at the empty set (last position)
template <class F>
SpinVec<F> spin_infinity(const F& k, const SpinIndex& si) {
    SpinVec<F> v = spin_zero(k, si);
    v[si.dim() - 1] = k.one();
    return v;
}

// The subsets of {g+1,...,2g} in canonical coordinate order, as sorted lists
// of the actual elements (descending size, then reverse lexicographic).
inline std::vector<std::vector<int>> spin_subset_order(int g) {
    SpinIndex si(g);
    std::vector<std::vector<int>> out;
    out.reserve(si.dim());
    for (std::uint32_t i = 0; i < si.dim(); ++i) {
        std::vector<int> subset;
        for (int b = g - 1; b >= 0; --b)
            if (si.subset_at(i) >> b & 1) subset.push_back(g + 1 + b);
        out.push_back(std::move(subset));
    }
    return out;
}

// Action of the straightened basis vector q_i on the spinor s (i in 0..2g).
template <class F>
SpinVec<F> clifford_act_basis(const F& k, const SpinIndex& si, int i, const SpinVec<F>& s) {
    const int g = si.g();
    SpinVec<F> out = spin_zero(k, si);
    if (i == g) {
        for (std::uint32_t pos = 0; pos < si.dim(); ++pos) {
            if (k.is_zero(s[pos])) continue;
            std::uint32_t m = si.subset_at(pos);
            out[pos] = (__builtin_popcount(m) % 2 == 0) ? s[pos] : k.neg(s[pos]);
        }
        return out;
    }
    if (i > g) {
        const int b = i - (g + 1);
        for (std::uint32_t pos = 0; pos < si.dim(); ++pos) {
            if (k.is_zero(s[pos])) continue;
            std::uint32_t m = si.subset_at(pos);
            if (m >> b & 1) continue;  // wedge with a repeated factor
            int above = __builtin_popcount(m >> (b + 1));
            std::uint32_t target = si.position(m | (1u << b));
            typename F::Elem v = (above % 2 == 0) ? s[pos] : k.neg(s[pos]);
            out[target] = k.add(out[target], v);
        }
        return out;
    }
    // i < g: contraction against the partner q_{2g-i}, with the factor 2
    const int b = (2 * g - i) - (g + 1);
    typename F::Elem two = k.from_int(2);
    for (std::uint32_t pos = 0; pos < si.dim(); ++pos) {
        if (k.is_zero(s[pos])) continue;
        std::uint32_t m = si.subset_at(pos);
        if (!(m >> b & 1)) continue;
        int above = __builtin_popcount(m >> (b + 1));
        std::uint32_t target = si.position(m & ~(1u << b));
        typename F::Elem v = k.mul(two, s[pos]);
        if (above % 2 == 1) v = k.neg(v);
        out[target] = k.add(out[target], v);
    }
    return out;
}

// Clifford action of an arbitrary vector of V, given in straightened
// coordinates, on the spinor s.
template <class F>
SpinVec<F> clifford_act(const F& k, const SpinIndex& si, const std::vector<typename F::Elem>& v_straight,
                        const SpinVec<F>& s) {
    internal_check(static_cast<int>(v_straight.size()) == 2 * si.g() + 1, "vector dimension");
    SpinVec<F> out = spin_zero(k, si);
    for (int i = 0; i < static_cast<int>(v_straight.size()); ++i) {
        if (k.is_zero(v_straight[i])) continue;
        SpinVec<F> t = clifford_act_basis(k, si, i, s);
        for (std::uint32_t j = 0; j < si.dim(); ++j)
            if (!k.is_zero(t[j])) out[j] = k.add(out[j], k.mul(v_straight[i], t[j]));
    }
    return out;
}

template <class F>
SpinVec<F> clifford_act(const QuadSpace<F>& space, const VElem<F>& v, const SpinVec<F>& s, const SpinIndex& si) {
    return clifford_act(space.field(), si, space.to_straightened(v).coords, s);
}

// The covariant pairing on spinors. It is (-1)^{g(g+1)/2}-symmetric and
// detects incidence of maximal isotropic subspaces.
template <class F>
typename F::Elem spinor_pairing(const F& k, const SpinIndex& si, const SpinVec<F>& s1, const SpinVec<F>& s2) {
    typename F::Elem acc = k.zero();
    for (std::uint32_t pos = 0; pos < si.dim(); ++pos) {
        if (k.is_zero(s1[pos])) continue;
        std::uint32_t m = si.subset_at(pos);
        std::uint32_t cpos = si.position(si.full_mask() & ~m);
        if (k.is_zero(s2[cpos])) continue;
        typename F::Elem t = k.mul(s1[pos], s2[cpos]);
        if (si.beta_sign(m) < 0) t = k.neg(t);
        acc = k.add(acc, t);
    }
    return acc;
}

// Gram matrix of the pairing in the canonical coordinates.
template <class F>
Matrix<F> spinor_pairing_matrix(const F& k, const SpinIndex& si) {
    Matrix<F> b(k, si.dim(), si.dim());
    for (std::uint32_t pos = 0; pos < si.dim(); ++pos) {
        std::uint32_t m = si.subset_at(pos);
        std::uint32_t cpos = si.position(si.full_mask() & ~m);
        b.at(pos, cpos) = si.beta_sign(m) < 0 ? k.neg(k.one()) : k.one();
    }
    return b;
}

/* ------------------------------------------------------- pure spinors --- */

// A maximal isotropic subspace in normalised coordinates relative to the
// marked subset J of {g+1, ..., 2g}: the subspace admits a unique basis
// l_j = q'_j + xi_{2g-j} q_g + sum_i A_{i,2g-j} q'_i, and the matrix
// xi_{ij} = A_{ij} + (1/2) xi_i xi_j is antisymmetric. Here q'_i permutes the
// hyperbolic pairs so that J-indexed vectors stay put and the others swap
// with their partners.
template <class F>
struct IsotropicFrame {
    std::uint32_t subset_mask = 0;          // J, bit b <-> element g+1+b
    std::vector<typename F::Elem> xi;       // length g
    Matrix<F> xi_mat;                       // g x g, antisymmetric

    IsotropicFrame(const F& k, int g) : xi(g, k.zero()), xi_mat(k, g, g) {}
};

// Straightened index of q'_i for a frame with marked subset J: for low slots
// i in {0..g-1}, q'_i = q_i when 2g-i lies in J, and q_{2g-i} otherwise.
inline int primed_low_index(int g, std::uint32_t subset_mask, int i) {
    int b = g - 1 - i;  // 2g-i = g+1+b
    return (subset_mask >> b & 1) ? i : 2 * g - i;
}

// The Pfaffian xi_I of the frame data, per the partition-sum definition:
// even |I| pairs everything; odd |I| distinguishes one singleton. xi_empty=1.
template <class F>
typename F::Elem pfaffian(const F& k, const IsotropicFrame<F>& frame, const std::vector<int>& I) {
    for (size_t a = 1; a < I.size(); ++a) internal_check(I[a - 1] < I[a], "pfaffian index set must be sorted");
    // verify antisymmetry lazily (cheap, catches construction bugs)
    const int g = static_cast<int>(frame.xi.size());
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            internal_check(k.is_zero(k.add(frame.xi_mat.at(i, j), frame.xi_mat.at(j, i))),
                           "frame matrix is not antisymmetric");
    return pfaffian_unchecked(k, frame, I);
}

template <class F>
typename F::Elem pfaffian_unchecked(const F& k, const IsotropicFrame<F>& frame, const std::vector<int>& I) {
    const size_t r = I.size();
    if (r == 0) return k.one();
    typename F::Elem acc = k.zero();
    if (r % 2 == 1) {
        // singleton {i_0} plus a pairing of the rest; eps is the signature of
        // (i_0, pairs flattened) against I ascending
        for (size_t s = 0; s < r; ++s) {
            std::vector<int> rest;
            rest.reserve(r - 1);
            for (size_t t = 0; t < r; ++t)
                if (t != s) rest.push_back(I[t]);
            // moving I[s] to the front costs s transpositions
            typename F::Elem sub = pfaffian_unchecked(k, frame, rest);
            typename F::Elem term = k.mul(frame.xi[I[s]], sub);
            if (s % 2 == 1) term = k.neg(term);
            acc = k.add(acc, term);
        }
        return acc;
    }
    // even: pair the smallest element with each other element
    for (size_t s = 1; s < r; ++s) {
        std::vector<int> rest;
        rest.reserve(r - 2);
        for (size_t t = 1; t < r; ++t)
            if (t != s) rest.push_back(I[t]);
        typename F::Elem sub = pfaffian_unchecked(k, frame, rest);
        typename F::Elem term = k.mul(frame.xi_mat.at(I[0], I[s]), sub);
        if ((s - 1) % 2 == 1) term = k.neg(term);
        acc = k.add(acc, term);
    }
    return acc;
}

// The pure spinor attached to a frame, built by applying the Clifford-group
// element (1 + (1/2) q_g sum_j xi_j q'_j) prod_{i<j} (1 + (1/2) xi_ij q'_i q'_j)
// to the monomial q_J. The factors commute; the construction fixes every sign
// that the closed Pfaffian formula leaves open in the non-generic case.
// The output has coordinate exactly 1 at the position of J.
template <class F>
SpinVec<F> pure_spinor(const F& k, const SpinIndex& si, const IsotropicFrame<F>& frame) {
    const int g = si.g();
    typename F::Elem half = k.inv(k.from_int(2));
    // start from q_J: descending-sorted wedge of the marked subset
    SpinVec<F> s = spin_zero(k, si);
    s[si.position(frame.subset_mask)] = k.one();
    for (int i = 0; i < g; ++i) {
        for (int j = i + 1; j < g; ++j) {
            const typename F::Elem& x = frame.xi_mat.at(i, j);
            if (k.is_zero(x)) continue;
            SpinVec<F> t = clifford_act_basis(k, si, primed_low_index(g, frame.subset_mask, j), s);
            t = clifford_act_basis(k, si, primed_low_index(g, frame.subset_mask, i), t);
            typename F::Elem c = k.mul(half, x);
            for (std::uint32_t q = 0; q < si.dim(); ++q)
                if (!k.is_zero(t[q])) s[q] = k.add(s[q], k.mul(c, t[q]));
        }
    }
    SpinVec<F> lin = spin_zero(k, si);
    bool any = false;
    for (int j = 0; j < g; ++j) {
        if (k.is_zero(frame.xi[j])) continue;
        any = true;
        SpinVec<F> t = clifford_act_basis(k, si, primed_low_index(g, frame.subset_mask, j), s);
        for (std::uint32_t q = 0; q < si.dim(); ++q)
            if (!k.is_zero(t[q])) lin[q] = k.add(lin[q], k.mul(frame.xi[j], t[q]));
    }
    if (any) {
        SpinVec<F> t = clifford_act_basis(k, si, g, lin);
        for (std::uint32_t q = 0; q < si.dim(); ++q)
            if (!k.is_zero(t[q])) s[q] = k.add(s[q], k.mul(half, t[q]));
    }
    internal_check(k.is_one(s[si.position(frame.subset_mask)]), "pure spinor normalisation");
    return s;
}

// Closed generic formula (frame subset = full set), kept as an independent
// cross-check of the construction above: the coordinate at the position of
// (full \ hat I) equals (-1)^{sum I + |I| (g+1)} 2^{floor(|I|/2)} xi_I.
template <class F>
SpinVec<F> pure_spinor_generic_formula(const F& k, const SpinIndex& si, const IsotropicFrame<F>& frame) {
    const int g = si.g();
    internal_check(frame.subset_mask == si.full_mask(), "generic formula needs the full marked subset");
    SpinVec<F> s = spin_zero(k, si);
    for (std::uint32_t m = 0; m < si.dim(); ++m) {
        // m runs over subsets I of {0..g-1}: bit t <-> low index t
        std::vector<int> I;
        int sum = 0;
        for (int t = 0; t < g; ++t)
            if (m >> t & 1) {
                I.push_back(t);
                sum += t;
            }
        typename F::Elem xi_I = pfaffian_unchecked(k, frame, I);
        typename F::Elem c = xi_I;
        for (int e = 0; e < static_cast<int>(I.size()) / 2; ++e) c = k.mul(c, k.from_int(2));
        if ((sum + static_cast<int>(I.size()) * (g + 1)) % 2 == 1) c = k.neg(c);
        // hat I = {2g - i} as a mask: low index t maps to bit g-1-t
        std::uint32_t hat = 0;
        for (int t : I) hat |= 1u << (g - 1 - t);
        s[si.position(si.full_mask() & ~hat)] = c;
    }
    return s;
}

// The Clifford annihilator {v in V : v s = 0} of a nonzero spinor, returned
// as rows of straightened coordinates. The spinor is pure exactly when the
// annihilator has dimension g.
template <class F>
Matrix<F> annihilator(const F& k, const SpinIndex& si, const SpinVec<F>& s) {
    const int n = 2 * si.g() + 1;
    Matrix<F> m(k, si.dim(), n);
    for (int i = 0; i < n; ++i) {
        SpinVec<F> t = clifford_act_basis(k, si, i, s);
        for (std::uint32_t j = 0; j < si.dim(); ++j) m.at(j, i) = t[j];
    }
    return kernel_basis(m);
}

template <class F>
bool is_pure_spinor(const F& k, const SpinIndex& si, const SpinVec<F>& s) {
    return annihilator(k, si, s).rows() == si.g();
}

/* ------------------------------------------------------ quadric ideal --- */

// Basis of the space of quadrics vanishing on all pure spinors, computed as
// the kernel of evaluating the degree-2 monomials on random pure spinors.
// Rows index quadrics; columns index monomial pairs (i, j), i <= j, ordered
// lexicographically. Expected dimension: binom(2^g+1, 2) - binom(2g+1, g).
template <class F>
struct QuadricIdeal {
    std::vector<std::pair<int, int>> monomials;  // coordinate index pairs
    Matrix<F> basis;                             // each row one quadric
};

template <class F>
QuadricIdeal<F> quadric_relations(const F& k, const SpinIndex& si, Rng& rng) {
    const int n = static_cast<int>(si.dim());
    std::vector<std::pair<int, int>> mons;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) mons.emplace_back(i, j);
    const int cols = static_cast<int>(mons.size());
    const int g = si.g();

    auto sample = [&](int count) {
        Matrix<F> rows(k, count, cols);
        for (int r = 0; r < count; ++r) {
            IsotropicFrame<F> fr(k, g);
            fr.subset_mask = si.full_mask();
            for (int i = 0; i < g; ++i) fr.xi[i] = k.random(rng);
            for (int i = 0; i < g; ++i)
                for (int j = i + 1; j < g; ++j) {
                    fr.xi_mat.at(i, j) = k.random(rng);
                    fr.xi_mat.at(j, i) = k.neg(fr.xi_mat.at(i, j));
                }
            SpinVec<F> s = pure_spinor(k, si, fr);
            for (int c = 0; c < cols; ++c) rows.at(r, c) = k.mul(s[mons[c].first], s[mons[c].second]);
        }
        return rows;
    };

    int count = 2 * cols + 8;
    Matrix<F> rows = sample(count);
    int rank = matrix_rank(rows);
    Matrix<F> more = sample(count / 2);
    Matrix<F> stacked(k, rows.rows() + more.rows(), cols);
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < cols; ++j) stacked.at(i, j) = rows.at(i, j);
    for (int i = 0; i < more.rows(); ++i)
        for (int j = 0; j < cols; ++j) stacked.at(rows.rows() + i, j) = more.at(i, j);
    if (matrix_rank(stacked) != rank)
        throw MathError("quadric sampling did not stabilise; use a larger base field");
    return {std::move(mons), kernel_basis(stacked)};
}

// Evaluates the quadric in row `row` at a spin vector.
template <class F>
typename F::Elem quadric_eval(const F& k, const QuadricIdeal<F>& ideal, int row, const SpinVec<F>& s) {
    typename F::Elem acc = k.zero();
    for (int c = 0; c < static_cast<int>(ideal.monomials.size()); ++c) {
        const auto& e = ideal.basis.at(row, c);
        if (k.is_zero(e)) continue;
        acc = k.add(acc, k.mul(e, k.mul(s[ideal.monomials[c].first], s[ideal.monomials[c].second])));
    }
    return acc;
}

}  // namespace kummer

#endif
