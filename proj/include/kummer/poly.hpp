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

// Dense univariate polynomials over an exact field context.

#ifndef KUMMER_POLY_HPP
#define KUMMER_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/fields.hpp"

namespace kummer {

template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    explicit Poly(F field) : field_(std::move(field)) {}
    // coefficients ascending by degree; trailing zeros are stripped
    Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const F& field) { return Poly(field); }
    static Poly one(const F& field) { return constant(field, field.one()); }
    static Poly constant(const F& field, Elem c) {
        Poly r(field);
        if (!field.is_zero(c)) r.c_.push_back(std::move(c));
        return r;
    }
    static Poly x(const F& field) { return monomial(field, 1, field.one()); }
    static Poly monomial(const F& field, int deg, Elem c) {
        Poly r(field);
        if (!field.is_zero(c)) {
            r.c_.assign(deg + 1, field.zero());
            r.c_.back() = std::move(c);
        }
        return r;
    }

    const F& field() const { return field_; }
    // degree of the zero polynomial is the sentinel -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
    bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
        return c_[i];
    }
    const Elem& leading() const {
        if (c_.empty()) throw MathError("zero polynomial has no leading coefficient");
        return c_.back();
    }

    Poly operator+(const Poly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
        return Poly(field_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
        return Poly(field_, std::move(r));
    }
    Poly operator-() const {
        std::vector<Elem> r(c_);
        for (auto& x : r) x = field_.neg(x);
        Poly p(field_);
        p.c_ = std::move(r);
        return p;
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(field_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return Poly(field_, std::move(r));
    }
    Poly scaled(const Elem& s) const {
        std::vector<Elem> r(c_);
        for (auto& x : r) x = field_.mul(x, s);
        return Poly(field_, std::move(r));
    }
    Poly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return *this;
        std::vector<Elem> r(c_.size() + k, field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(field_, std::move(r));
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!field_.eq(c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Elem eval(const Elem& a) const {
        Elem r = field_.zero();
        for (size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, a), c_[i]);
        return r;
    }

    // Evaluate after mapping coefficients into another field.
    template <class G, class Map>
    typename G::Elem eval_mapped(const G& target, const Map& map_coeff, const typename G::Elem& a) const {
        typename G::Elem r = target.zero();
        for (size_t i = c_.size(); i-- > 0;) r = target.add(target.mul(r, a), map_coeff(c_[i]));
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<Elem> r(c_.size() - 1, field_.zero());
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long>(i)));
        return Poly(field_, std::move(r));
    }

    Poly monic() const {
        if (is_zero()) throw MathError("cannot normalise the zero polynomial");
        if (is_monic()) return *this;
        return scaled(field_.inv(c_.back()));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            std::string cs = field_.str(c_[i]);
            if (i == 0) {
                s += cs;
            } else {
                if (!field_.is_one(c_[i])) s += cs + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    F field_;
    std::vector<Elem> c_;

    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }
};

// Euclidean division a = q*b + r with deg r < deg b. The divisor must be
// monic; this keeps the division denominator-free over any coefficient ring
// containing the inputs.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    const F& k = a.field();
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (!b.is_monic()) throw MathError("poly_divmod requires a monic divisor");
    if (a.degree() < b.degree()) return {Poly<F>::zero(k), a};
    std::vector<typename F::Elem> rem(a.coeffs());
    const int db = b.degree();
    std::vector<typename F::Elem> q(a.degree() - db + 1, k.zero());
    for (int i = a.degree(); i >= db; --i) {
        typename F::Elem c = rem[i];
        if (k.is_zero(c)) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = k.sub(rem[i - db + j], k.mul(c, b.coeff(j)));
    }
    return {Poly<F>(k, std::move(q)), Poly<F>(k, std::move(rem))};
}

// Division with arbitrary nonzero divisor (normalises internally).
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod_general(const Poly<F>& a, const Poly<F>& b) {
    const F& k = a.field();
    if (b.is_zero()) throw MathError("division by the zero polynomial");
    if (b.is_monic()) return poly_divmod(a, b);
    typename F::Elem lc = b.leading();
    auto [q, r] = poly_divmod(a, b.monic());
    return {q.scaled(k.inv(lc)), r};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod_general(a, b).second;
}

// Exact quotient; throws if the division leaves a remainder.
template <class F>
Poly<F> poly_exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = poly_divmod_general(a, b);
    if (!r.is_zero()) throw MathError("polynomial division is not exact");
    return q;
}

// Monic gcd.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    const F& k = a.field();
    while (!b.is_zero()) {
        Poly<F> r = poly_divmod(a, b.monic()).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    (void)k;
    return a.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
    const F& k = a.field();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::one(k), s1 = Poly<F>::zero(k);
    Poly<F> t0 = Poly<F>::zero(k), t1 = Poly<F>::one(k);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod_general(r0, r1);
        Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    typename F::Elem lc_inv = k.inv(r0.leading());
    return {r0.scaled(lc_inv), s0.scaled(lc_inv), t0.scaled(lc_inv)};
}

// a^e mod m (m monic).
template <class F>
Poly<F> poly_powmod(Poly<F> a, mpz_class e, const Poly<F>& m) {
    const F& k = a.field();
    Poly<F> r = Poly<F>::one(k);
    a = poly_divmod(a, m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_divmod(r * a, m).second;
        a = poly_divmod(a * a, m).second;
        e >>= 1;
    }
    return r;
}

// Resultant via the Euclidean remainder sequence.
template <class F>
typename F::Elem poly_resultant(Poly<F> a, Poly<F> b) {
    const F& k = a.field();
    if (a.is_zero() || b.is_zero()) return k.zero();
    typename F::Elem acc = k.one();
    while (true) {
        if (b.degree() == 0) {
            // res(a, c) = c^{deg a}
            typename F::Elem c = b.coeff(0), r = k.one();
            for (int i = 0; i < a.degree(); ++i) r = k.mul(r, c);
            return k.mul(acc, r);
        }
        Poly<F> r = poly_divmod_general(a, b).second;
        if (r.is_zero()) return k.zero();
        // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
        typename F::Elem lc_pow = k.one();
        for (int i = 0; i < a.degree() - r.degree(); ++i) lc_pow = k.mul(lc_pow, b.leading());
        if ((a.degree() & 1) && (b.degree() & 1)) lc_pow = k.neg(lc_pow);
        acc = k.mul(acc, lc_pow);
        a = std::move(b);
        b = std::move(r);
    }
}

// Discriminant of a monic polynomial: (-1)^{n(n-1)/2} res(f, f').
template <class F>
typename F::Elem poly_discriminant(const Poly<F>& f) {
    const F& k = f.field();
    if (!f.is_monic()) throw MathError("discriminant expects a monic polynomial");
    typename F::Elem r = poly_resultant(f, f.derivative());
    int n = f.degree();
    if ((n * (n - 1) / 2) % 2 == 1) r = k.neg(r);
    return r;
}

template <class F>
Poly<F> poly_random_monic(const F& k, int deg, Rng& rng) {
    std::vector<typename F::Elem> c(deg + 1, k.zero());
    for (int i = 0; i < deg; ++i) c[i] = k.random(rng);
    c[deg] = k.one();
    return Poly<F>(k, std::move(c));
}

// Maps a polynomial coefficientwise into another field.
template <class G, class F, class Map>
Poly<G> poly_map(const G& target, const Poly<F>& a, const Map& map_coeff) {
    std::vector<typename G::Elem> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(map_coeff(x));
    return Poly<G>(target, std::move(c));
}

}  // namespace kummer

#endif
