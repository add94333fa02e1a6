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

// Integer factorisation for moderate inputs (trial division + Pollard rho).
// Used for bad-prime enumeration and square-class representatives; not a
// general-purpose factoring engine.

#ifndef KUMMER_INTFACTOR_HPP
#define KUMMER_INTFACTOR_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "kummer/errors.hpp"

namespace kummer {

namespace detail {

inline mpz_class pollard_rho(const mpz_class& n) {
    // Brent's variant with deterministic restarts.
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        if (c > 64) throw MathError("integer factorisation failed (input too hard)");
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Prime factorisation of |n| as prime -> exponent (n must be nonzero).
inline std::map<mpz_class, int> factor_integer(mpz_class n) {
    if (n == 0) throw MathError("cannot factor zero");
    if (n < 0) n = -n;
    std::map<mpz_class, int> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= static_cast<long>(p);
        }
    }
    unsigned long q = 37;
    while (n > 1 && q <= 100000) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            ++out[mpz_class(q)];
            n /= static_cast<long>(q);
        }
        q += 2;
    }
    detail::factor_into(n, out);
    return out;
}

// Squarefree part of a nonzero rational, sign included: the canonical
// representative of its class modulo squares.
inline mpq_class squarefree_part(const mpq_class& x) {
    if (x == 0) throw MathError("zero has no square class");
    mpz_class n = x.get_num() * x.get_den();  // same class as x modulo squares
    int sign = n < 0 ? -1 : 1;
    auto fac = factor_integer(n);
    mpz_class core = 1;
    for (const auto& [p, e] : fac)
        if (e % 2) core *= p;
    return mpq_class(sign * core);
}

// All integer roots of a monic integer polynomial (coefficients ascending,
// leading 1), with multiplicity-free output.
inline std::vector<mpz_class> monic_integer_roots(const std::vector<mpz_class>& coeffs) {
    std::vector<mpz_class> roots;
    auto eval = [&](const mpz_class& a) {
        mpz_class r = 0;
        for (size_t i = coeffs.size(); i-- > 0;) r = r * a + coeffs[i];
        return r;
    };
    if (coeffs.empty()) return roots;
    mpz_class c0 = coeffs[0];
    if (c0 == 0) {
        roots.push_back(0);
        std::vector<mpz_class> reduced(coeffs.begin() + 1, coeffs.end());
        for (auto& r : monic_integer_roots(reduced))
            if (r != 0) roots.push_back(r);
        return roots;
    }
    auto fac = factor_integer(c0);
    // enumerate divisors
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    for (const auto& d : divs) {
        if (eval(d) == 0) roots.push_back(d);
        if (eval(-d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace kummer

#endif
