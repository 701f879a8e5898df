/*
   Copyright 2026 The frobtest Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FROBTEST_PRIME_FIELD_HPP
#define FROBTEST_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "frobtest/errors.hpp"

namespace frobtest {

/// Characteristic of the coefficient field. Primality is checked on construction.
class Prime {
   public:
    static constexpr std::uint64_t kMax = std::uint64_t{1} << 31;

    explicit Prime(std::uint64_t p) : p_(p) {
        if (p > kMax) throw InvalidInput("p must be at most 2^31, got " + std::to_string(p));
        if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
    }

    std::uint32_t value() const noexcept { return static_cast<std::uint32_t>(p_); }
    operator std::uint32_t() const noexcept { return value(); }

    static constexpr bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }

   private:
    std::uint64_t p_;
};

// Raw arithmetic on representatives in [0, p).
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
/// Inverse by Fermat; a must be nonzero.
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw InvalidInput("division by zero in F_p");
    return pow(a, p - 2, p);
}
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace fp

/// An element of F_p carrying its characteristic. Used at API boundaries; the polynomial
/// kernels work on raw representatives.
class FieldElem {
   public:
    FieldElem(std::int64_t v, Prime p) : v_(fp::reduce(v, p)), p_(p) {}

    std::uint32_t value() const noexcept { return v_; }
    Prime prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElem operator+(const FieldElem& o) const { return {check(o), fp::add(v_, o.v_, p_), p_}; }
    FieldElem operator-(const FieldElem& o) const { return {check(o), fp::sub(v_, o.v_, p_), p_}; }
    FieldElem operator*(const FieldElem& o) const { return {check(o), fp::mul(v_, o.v_, p_), p_}; }
    FieldElem operator-() const { return {true, fp::neg(v_, p_), p_}; }
    FieldElem inverse() const { return {true, fp::inv(v_, p_), p_}; }
    FieldElem pow(std::uint64_t e) const { return {true, fp::pow(v_, e, p_), p_}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.v_; }

   private:
    FieldElem(bool, std::uint32_t v, Prime p) : v_(v), p_(p) {}
    bool check(const FieldElem& o) const {
        if (!(o.p_ == p_)) throw RingMismatch("elements of different prime fields");
        return true;
    }

    std::uint32_t v_;
    Prime p_;
};

}  // namespace frobtest

#endif
