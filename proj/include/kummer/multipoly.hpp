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

// Sparse multivariate polynomials with graded reverse lexicographic term
// order. Only what the quartic machinery needs: ring arithmetic, evaluation
// and coefficient access in a deterministic order.

#ifndef KUMMER_MULTIPOLY_HPP
#define KUMMER_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/fields.hpp"

namespace kummer {

using Monomial = std::vector<std::uint8_t>;  // exponents per variable

// Graded reverse lexicographic order, largest term first: higher total degree
// wins; among equal degrees, the monomial whose *last* differing exponent is
// smaller is the larger one.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

template <class F>
class MultiPoly {
public:
    using Elem = typename F::Elem;
    using Terms = std::map<Monomial, Elem, GrevlexGreater>;

    MultiPoly(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

    static MultiPoly constant(const F& field, int nvars, Elem c) {
        MultiPoly r(field, nvars);
        if (!field.is_zero(c)) r.terms_[Monomial(nvars, 0)] = std::move(c);
        return r;
    }
    static MultiPoly variable(const F& field, int nvars, int i, Elem c) {
        MultiPoly r(field, nvars);
        if (!field.is_zero(c)) {
            Monomial m(nvars, 0);
            m[i] = 1;
            r.terms_[std::move(m)] = std::move(c);
        }
        return r;
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Elem coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    void add_term(const Monomial& m, const Elem& c) {
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(field_, nvars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = field_.neg(c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(field_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(ma);
                for (int i = 0; i < nvars_; ++i) m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
                r.add_term(m, field_.mul(ca, cb));
            }
        return r;
    }
    MultiPoly scaled(const Elem& s) const {
        MultiPoly r(field_, nvars_);
        if (field_.is_zero(s)) return r;
        for (const auto& [m, c] : terms_) {
            Elem x = field_.mul(c, s);
            if (!field_.is_zero(x)) r.terms_[m] = std::move(x);
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (it->first != jt->first || !field_.eq(it->second, jt->second)) return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Elem eval(const std::vector<Elem>& point) const {
        internal_check(static_cast<int>(point.size()) == nvars_, "evaluation point arity");
        Elem acc = field_.zero();
        for (const auto& [m, c] : terms_) {
            Elem t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) t = field_.mul(t, point[i]);
            acc = field_.add(acc, t);
        }
        return acc;
    }

    // Coefficientwise map into another field (same variables).
    template <class G, class Map>
    MultiPoly<G> map(const G& target, const Map& map_coeff) const {
        MultiPoly<G> r(target, nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, map_coeff(c));
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string t = field_.str(c);
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                t += "*" + names[i];
                if (m[i] > 1) t += "^" + std::to_string(static_cast<int>(m[i]));
            }
            s += t;
        }
        return s;
    }

private:
    F field_;
    int nvars_;
    Terms terms_;
};

// Canonical text key for a monomial in variables x1..xn ("1" for the
// constant term), used by the JSON interchange format.
inline std::string monomial_key(const Monomial& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(static_cast<int>(m[i]));
    }
    return s.empty() ? "1" : s;
}

}  // namespace kummer

#endif
