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

#ifndef KUMMER_COMPLEX_ROOTS_HPP
#define KUMMER_COMPLEX_ROOTS_HPP

#include <complex>
#include <vector>

#include "kummer/poly.hpp"

namespace kummer {

struct ComplexRoots {
    std::vector<std::complex<double>> roots;  // sorted by (real, imag)
    double max_residual;                      // max |f(root)| over returned roots
};

// Approximate complex roots of a squarefree rational polynomial. Companion
// matrix eigenvalues seed a Newton refinement in extended precision; fails if
// the certified residual does not reach the tolerance. The default tolerance
// is 1e-12 * max(1, Ht(f))^{deg f} with Ht(f) = max |c_i|^{1/i}.
ComplexRoots complex_roots(const Poly<RationalField>& f, double tolerance = 0.0);

}  // namespace kummer

#endif
