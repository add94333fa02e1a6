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

// Exact field arithmetic: Q (GMP rationals), prime fields F_p with p an odd
// prime, and extension fields F_{p^d} modulo a fixed monic irreducible.
//
// Fields are small value-semantic context objects; elements are plain data.
// Every algorithm in this library is templated on the field context and calls
// arithmetic through it, so the same code runs over Q, F_p and F_{p^d}.

#ifndef KUMMER_FIELDS_HPP
#define KUMMER_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "kummer/errors.hpp"

namespace kummer {

using Rng = std::mt19937_64;

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

/* ---------------------------------------------------------------- Q ----- */

class RationalField {
public:
    using Elem = mpq_class;

    static constexpr bool is_finite = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long n) const { return Elem(n); }
    Elem from_mpq(const mpq_class& q) const {
        Elem e = q;
        e.canonicalize();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw MathError("division by zero in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    bool is_square(const Elem& a) const {
        if (a == 0) return true;
        if (a < 0) return false;
        return mpz_perfect_square_p(a.get_num().get_mpz_t()) != 0 &&
               mpz_perfect_square_p(a.get_den().get_mpz_t()) != 0;
    }

    // Small random rationals, suitable for property tests.
    Elem random(Rng& rng) const {
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 12);
        Elem e(num(rng), den(rng));
        e.canonicalize();
        return e;
    }

    std::string str(const Elem& a) const {
        if (a.get_den() == 1) return a.get_num().get_str();
        return a.get_num().get_str() + "/" + a.get_den().get_str();
    }

    bool same(const RationalField&) const { return true; }
};

/* --------------------------------------------------------------- F_p ---- */

class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr bool is_finite = true;

    PrimeField() : p_(3) {}
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p == 2) throw MathError("characteristic 2 is not supported");
        if (!detail::is_prime_u64(p)) throw MathError("modulus " + std::to_string(p) + " is not prime");
        if (p > (1ull << 62)) throw MathError("prime too large");
    }

    std::uint64_t p() const { return p_; }
    mpz_class order() const { return mpz_class(static_cast<unsigned long>(p_)); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long n) const {
        long long r = static_cast<long long>(n % static_cast<long long>(p_));
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_mpq(const mpq_class& q) const {
        mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
        if (num < 0) num += static_cast<unsigned long>(p_);
        mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
        Elem d = static_cast<Elem>(den.get_ui());
        if (d == 0) throw MathError("denominator divisible by p");
        return mul(static_cast<Elem>(num.get_ui()), inv(d));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw MathError("division by zero in F_p");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }

    bool is_square(Elem a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

    Elem random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
        return d(rng);
    }

    std::string str(Elem a) const { return std::to_string(a); }

    bool same(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint64_t p_;
};

/* ------------------------------------------------------------ F_{p^d} --- */

// Elements are coefficient vectors of length d (ascending powers of the
// generator) reduced modulo a fixed monic irreducible of degree d.
class ExtField {
public:
    using Elem = std::vector<std::uint64_t>;

    static constexpr bool is_finite = true;

    ExtField() = default;

    // modulus: monic, degree d >= 1, coefficients ascending, length d+1.
    ExtField(PrimeField fp, std::vector<std::uint64_t> modulus) {
        if (modulus.size() < 2 || modulus.back() != 1)
            throw MathError("extension modulus must be monic of degree >= 1");
        auto ctx = std::make_shared<Ctx>();
        ctx->fp = fp;
        ctx->modulus = std::move(modulus);
        ctx_ = std::move(ctx);
    }

    const PrimeField& base() const { return ctx_->fp; }
    std::uint64_t p() const { return ctx_->fp.p(); }
    int degree() const { return static_cast<int>(ctx_->modulus.size()) - 1; }
    const std::vector<std::uint64_t>& modulus() const { return ctx_->modulus; }
    mpz_class order() const {
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p()), static_cast<unsigned long>(degree()));
        return q;
    }

    Elem zero() const { return Elem(degree(), 0); }
    Elem one() const {
        Elem e(degree(), 0);
        e[0] = 1;
        return e;
    }
    Elem from_int(long n) const {
        Elem e(degree(), 0);
        e[0] = base().from_int(n);
        return e;
    }
    Elem from_mpq(const mpq_class& q) const {
        Elem e(degree(), 0);
        e[0] = base().from_mpq(q);
        return e;
    }
    Elem from_base(std::uint64_t a) const {
        Elem e(degree(), 0);
        e[0] = a;
        return e;
    }
    // Embeds a coefficient vector (any length), reducing mod the modulus.
    Elem from_coeffs(const std::vector<std::uint64_t>& c) const {
        Elem r = reduce(c);
        r.resize(degree(), 0);
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const {
        const auto& fp = base();
        Elem r(a);
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp.add(r[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        const auto& fp = base();
        Elem r(a);
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp.sub(r[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        const auto& fp = base();
        Elem r(a);
        for (auto& x : r) x = fp.neg(x);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        const auto& fp = base();
        const int d = degree();
        std::vector<std::uint64_t> prod(2 * d - 1, 0);
        for (int i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (b[j] == 0) continue;
                prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
            }
        }
        Elem r = reduce(prod);
        r.resize(d, 0);
        return r;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw MathError("division by zero in F_{p^d}");
        // extended Euclid on coefficient vectors against the modulus
        const auto& fp = base();
        auto deg = [](const std::vector<std::uint64_t>& v) {
            for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
                if (v[i] != 0) return i;
            return -1;
        };
        std::vector<std::uint64_t> r0 = ctx_->modulus, r1 = a, s0{}, s1{1};
        while (deg(r1) > 0) {
            // divide r0 by r1
            int d0 = deg(r0), d1 = deg(r1);
            std::vector<std::uint64_t> q(d0 - d1 + 1, 0), rem = r0;
            std::uint64_t lcinv = fp.inv(r1[d1]);
            for (int i = d0; i >= d1; --i) {
                std::uint64_t c = fp.mul(rem[i], lcinv);
                if (c == 0) continue;
                q[i - d1] = c;
                for (int j = 0; j <= d1; ++j) rem[i - d1 + j] = fp.sub(rem[i - d1 + j], fp.mul(c, r1[j]));
            }
            // s_next = s0 - q*s1
            std::vector<std::uint64_t> snext(std::max(s0.size(), q.size() + s1.size()), 0);
            for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j)
                    snext[i + j] = fp.sub(snext[i + j], fp.mul(q[i], s1[j]));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snext);
        }
        internal_check(deg(r1) == 0, "gcd with irreducible modulus must be a unit");
        std::uint64_t c = fp.inv(r1[0]);
        Elem out(degree(), 0);
        for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = fp.mul(s1[i], c);
        return out;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, mpz_class e) const {
        Elem r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    // The p-power Frobenius, the generator of Gal(F_{p^d}/F_p).
    Elem frobenius(const Elem& a) const { return pow(a, mpz_class(static_cast<unsigned long>(p()))); }
    // Trace down to F_p (returned as a base-field element).
    std::uint64_t trace(const Elem& a) const {
        Elem acc = a, fr = a;
        for (int i = 1; i < degree(); ++i) {
            fr = frobenius(fr);
            acc = add(acc, fr);
        }
        for (size_t i = 1; i < acc.size(); ++i) internal_check(acc[i] == 0, "trace not in base field");
        return acc[0];
    }

    bool is_zero(const Elem& a) const {
        for (auto x : a)
            if (x != 0) return false;
        return true;
    }
    bool is_one(const Elem& a) const {
        if (a.empty() || a[0] != 1) return false;
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    bool is_square(const Elem& a) const {
        if (is_zero(a)) return true;
        return is_one(pow(a, (order() - 1) / 2));
    }

    Elem random(Rng& rng) const {
        Elem e(degree());
        for (auto& x : e) x = base().random(rng);
        return e;
    }

    std::string str(const Elem& a) const {
        std::string s = "[";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + "]";
    }

    bool same(const ExtField& other) const {
        return p() == other.p() && ctx_->modulus == other.ctx_->modulus;
    }

private:
    struct Ctx {
        PrimeField fp;
        std::vector<std::uint64_t> modulus;
    };
    std::shared_ptr<const Ctx> ctx_;

    std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> c) const {
        const auto& fp = base();
        const auto& m = ctx_->modulus;
        const int d = degree();
        for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
            std::uint64_t lead = c[i];
            if (lead == 0) continue;
            c[i] = 0;
            for (int j = 0; j < d; ++j)
                c[i - d + j] = fp.sub(c[i - d + j], fp.mul(lead, m[j]));
        }
        c.resize(d, 0);
        return c;
    }
};

}  // namespace kummer

#endif
