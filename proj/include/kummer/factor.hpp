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

// Factorisation utilities over prime fields: distinct-degree splitting data,
// the deterministic extension-field modulus, and root finding in F_{p^d}.

#ifndef KUMMER_FACTOR_HPP
#define KUMMER_FACTOR_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "kummer/fields.hpp"
#include "kummer/poly.hpp"

namespace kummer {

template <class F>
bool poly_is_squarefree(const Poly<F>& f) {
    if (f.degree() <= 0) return !f.is_zero();
    return poly_gcd(f, f.derivative()).degree() == 0;
}

// Degrees of the irreducible factors of a squarefree monic f over F_p,
// with multiplicity (one entry per factor), ascending.
inline std::vector<int> factor_degrees(const Poly<PrimeField>& f) {
    const PrimeField& k = f.field();
    if (!f.is_monic()) throw MathError("factor_degrees expects a monic polynomial");
    if (!poly_is_squarefree(f)) throw MathError("zero discriminant");
    std::vector<int> degrees;
    Poly<PrimeField> rest = f;
    Poly<PrimeField> x = Poly<PrimeField>::x(k);
    Poly<PrimeField> h = poly_divmod(x, f).second;  // x mod f
    int d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            degrees.push_back(rest.degree());
            break;
        }
        h = poly_powmod(h, mpz_class(static_cast<unsigned long>(k.p())), f);
        Poly<PrimeField> g = poly_gcd(rest, poly_divmod(h - x, rest.monic()).second);
        if (g.degree() > 0) {
            internal_check(g.degree() % d == 0, "distinct-degree factor size");
            degrees.insert(degrees.end(), g.degree() / d, d);
            rest = poly_exact_div(rest, g);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

inline bool poly_is_irreducible(const Poly<PrimeField>& f) {
    const PrimeField& k = f.field();
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    // x^{p^d} == x mod f, and x^{p^{d/q}} - x coprime to f for primes q | d
    Poly<PrimeField> x = Poly<PrimeField>::x(k);
    mpz_class p(static_cast<unsigned long>(k.p()));
    std::vector<Poly<PrimeField>> frob;  // frob[i] = x^{p^{i+1}} mod f
    Poly<PrimeField> h = x;
    for (int i = 0; i < d; ++i) {
        h = poly_powmod(h, p, f);
        frob.push_back(h);
    }
    if (frob[d - 1] != poly_divmod(x, f).second) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0) continue;
        bool q_prime = true;
        for (int r = 2; r * r <= q; ++r)
            if (q % r == 0) q_prime = false;
        if (!q_prime) continue;
        if (poly_gcd(f, frob[d / q - 1] - x).degree() != 0) return false;
    }
    return true;
}

// The deterministic modulus for F_{p^d}: the lexicographically smallest monic
// irreducible of degree d, comparing coefficient tuples (c_0, ..., c_{d-1})
// ascending with 0 < 1 < ... < p-1.
inline std::vector<std::uint64_t> extension_modulus(const PrimeField& k, int d) {
    if (d < 1) throw MathError("extension degree must be >= 1");
    if (d == 1) return {0, 1};  // x, unused in practice
    std::vector<std::uint64_t> c(d, 0);
    while (true) {
        std::vector<std::uint64_t> full = c;
        full.push_back(1);
        Poly<PrimeField> f(k, std::vector<std::uint64_t>(full));
        if (f.degree() == d && poly_is_irreducible(f)) return full;
        // increment the tuple (c_{d-1} fastest so that c_0 is the most
        // significant position of the lexicographic comparison)
        int i = d - 1;
        while (i >= 0) {
            if (++c[i] < k.p()) break;
            c[i] = 0;
            --i;
        }
        internal_check(i >= 0, "no irreducible polynomial found");
    }
}

inline ExtField make_extension(const PrimeField& k, int d) {
    return ExtField(k, extension_modulus(k, d));
}

// All roots of a monic polynomial that splits completely over the given
// field, in deterministic order (sorted by coefficient tuple).
template <class F>
std::vector<typename F::Elem> roots_in_splitting_field(const F& k, const Poly<F>& f) {
    std::vector<typename F::Elem> roots;
    std::vector<Poly<F>> stack{f.monic()};
    Rng rng(0x5eed5eedULL);  // splitting is randomised; output order is sorted
    mpz_class half = (k.order() - 1) / 2;
    Poly<F> x = Poly<F>::x(k);
    while (!stack.empty()) {
        Poly<F> h = stack.back();
        stack.pop_back();
        if (h.degree() == 0) continue;
        if (h.degree() == 1) {
            roots.push_back(k.neg(h.coeff(0)));
            continue;
        }
        // strip a root at zero if present
        if (k.is_zero(h.coeff(0))) {
            roots.push_back(k.zero());
            stack.push_back(poly_exact_div(h, x));
            continue;
        }
        // random shift + Euler criterion split
        Poly<F> g = Poly<F>::zero(k);
        do {
            Poly<F> shifted = x + Poly<F>::constant(k, k.random(rng));
            Poly<F> w = poly_powmod(shifted, half, h) - Poly<F>::one(k);
            g = poly_gcd(h, w);
        } while (g.degree() <= 0 || g.degree() == h.degree());
        stack.push_back(g);
        stack.push_back(poly_exact_div(h, g));
    }
    if (static_cast<int>(roots.size()) != f.degree())
        throw MathError("polynomial does not split over the given field");
    std::sort(roots.begin(), roots.end());
    return roots;
}

template <class F>
struct SplittingData {
    int d;                               // degree of the splitting field over F_p
    ExtField ext;                        // F_{p^d} with the deterministic modulus
    std::vector<ExtField::Elem> roots;   // the deg(f) distinct roots, sorted
};

// Splitting data of a squarefree monic f over F_p: the splitting field
// F_{p^d} with d the lcm of the irreducible factor degrees, and the roots.
template <class F = PrimeField>
SplittingData<F> splitting_data(const Poly<PrimeField>& f) {
    const PrimeField& k = f.field();
    std::vector<int> degs = factor_degrees(f);  // checks squarefree
    int d = 1;
    for (int x : degs) d = std::lcm(d, x);
    ExtField ext = make_extension(k, d);
    Poly<ExtField> lifted = poly_map(ext, f, [&](std::uint64_t c) { return ext.from_base(c); });
    std::vector<ExtField::Elem> roots = roots_in_splitting_field(ext, lifted);
    return {d, ext, std::move(roots)};
}

}  // namespace kummer

#endif
