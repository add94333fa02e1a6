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

#include "kummer/complex_roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kummer/errors.hpp"
#include "kummer/factor.hpp"

namespace kummer {

namespace {

using cld = std::complex<long double>;

cld eval_poly(const std::vector<cld>& c, cld x) {
    cld r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

cld eval_deriv(const std::vector<cld>& c, cld x) {
    cld r = 0;
    for (size_t i = c.size(); i-- > 1;) r = r * x + static_cast<long double>(i) * c[i];
    return r;
}

}  // namespace

ComplexRoots complex_roots(const Poly<RationalField>& f, double tolerance) {
    const int n = f.degree();
    if (n < 1) throw MathError("complex_roots expects degree >= 1");
    if (!poly_is_squarefree(f)) throw MathError("complex_roots expects a squarefree polynomial");

    // monic coefficients as long doubles
    Poly<RationalField> fm = f.monic();
    std::vector<cld> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = cld(static_cast<long double>(fm.coeff(i).get_d()), 0.0L);

    if (tolerance <= 0.0) {
        // Ht(f) = max_i |c_i|^{1/i}, where c_i is the coefficient of x^{n-i}
        double ht = 1.0;
        for (int i = 1; i <= n; ++i) {
            double ci = std::abs(fm.coeff(n - i).get_d());
            if (ci > 0) ht = std::max(ht, std::pow(ci, 1.0 / i));
        }
        tolerance = 1e-12 * std::pow(std::max(1.0, ht), n);
    }

    // companion matrix eigenvalues as initial approximations
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -fm.coeff(i).get_d();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw MathError("eigenvalue computation failed");

    std::vector<cld> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = cld(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());

    // Newton refinement in long double, then one Aberth-style sweep set if needed
    auto refine = [&](cld z) {
        for (int it = 0; it < 80; ++it) {
            cld fx = eval_poly(c, z);
            cld dfx = eval_deriv(c, z);
            if (std::abs(dfx) == 0.0L) break;
            cld step = fx / dfx;
            z -= step;
            if (std::abs(step) < 1e-19L * std::max(1.0L, std::abs(z))) break;
        }
        return z;
    };
    for (auto& z : roots) z = refine(z);

    // real symmetrisation: a root whose imaginary part is negligible against
    // the Newton step scale is snapped onto the real axis and re-polished
    for (auto& z : roots) {
        if (z.imag() != 0.0L && std::abs(z.imag()) < 1e-14L * std::max(1.0L, std::abs(z.real()))) {
            z = cld(z.real(), 0.0L);
            z = refine(z);
        }
    }

    double max_res = 0.0;
    for (const auto& z : roots) max_res = std::max(max_res, static_cast<double>(std::abs(eval_poly(c, z))));
    if (max_res > tolerance) {
        std::ostringstream msg;
        msg << "root refinement did not converge: best residual " << max_res << " > tolerance " << tolerance;
        throw MathError(msg.str());
    }

    ComplexRoots out;
    out.roots.reserve(n);
    for (const auto& z : roots) out.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    std::sort(out.roots.begin(), out.roots.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.max_residual = max_res;
    return out;
}

}  // namespace kummer
