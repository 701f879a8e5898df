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

#ifndef FROBTEST_MONOMIAL_HPP
#define FROBTEST_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "frobtest/errors.hpp"

namespace frobtest {

inline constexpr std::size_t kMaxVars = 12;
using Exponent = std::uint32_t;
/// Hard ceiling on any single exponent; arithmetic past it throws ExponentOverflow.
inline constexpr Exponent kMaxExponent = Exponent{1} << 30;

/// Exponent vector. Slots past the ring's variable count are always zero, so every
/// componentwise operation can run over the full fixed-width array.
class Monomial {
   public:
    Monomial() = default;
    Monomial(std::initializer_list<Exponent> exps) {
        if (exps.size() > kMaxVars) throw InvalidInput("too many variables");
        std::size_t i = 0;
        for (auto v : exps) set(i++, v);
    }
    explicit Monomial(std::span<const Exponent> exps) {
        if (exps.size() > kMaxVars) throw InvalidInput("too many variables");
        for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
    }

    static Monomial variable(std::size_t i, Exponent power = 1) {
        Monomial m;
        m.set(i, power);
        return m;
    }

    Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
    std::uint64_t degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    void set(std::size_t i, Exponent v) {
        if (v > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^30");
        deg_ = deg_ - e_[i] + v;
        e_[i] = v;
    }

    bool divides(const Monomial& o) const noexcept {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            std::uint64_t s = std::uint64_t{a.e_[i]} + b.e_[i];
            if (s > kMaxExponent) throw ExponentOverflow("monomial product exceeds exponent cap");
            r.e_[i] = static_cast<Exponent>(s);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    /// Exact quotient; caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] - b.e_[i];
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }

    Monomial scaled(std::uint64_t q) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            std::uint64_t s = std::uint64_t{e_[i]} * q;
            if (s > kMaxExponent) throw ExponentOverflow("Frobenius power exceeds exponent cap");
            r.e_[i] = static_cast<Exponent>(s);
        }
        r.deg_ = deg_ * q;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.recount();
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        r.recount();
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }

    /// Componentwise floor(e / q) and e mod q.
    Monomial floor_div(Exponent q) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] / q;
        r.recount();
        return r;
    }
    Monomial mod(Exponent q) const noexcept {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] % q;
        r.recount();
        return r;
    }

    const std::array<Exponent, kMaxVars>& exponents() const noexcept { return e_; }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }
    /// Plain lexicographic comparison of exponent arrays (x_1 > x_2 > ...); used for
    /// canonical serialization independent of the working order.
    friend bool lex_less(const Monomial& a, const Monomial& b) noexcept { return a.e_ < b.e_; }

    std::size_t hash() const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto v : e_) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

   private:
    void recount() noexcept {
        deg_ = 0;
        for (auto v : e_) deg_ += v;
    }

    std::array<Exponent, kMaxVars> e_{};
    std::uint64_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Total multiplicative well-order on monomials.
class MonomialOrder {
   public:
    enum class Kind { lex, grevlex, block_grevlex };

    MonomialOrder() = default;
    static MonomialOrder lex(std::vector<std::uint8_t> perm = {}) { return {Kind::lex, 0, std::move(perm)}; }
    static MonomialOrder grevlex(std::vector<std::uint8_t> perm = {}) {
        return {Kind::grevlex, 0, std::move(perm)};
    }
    /// Grevlex on the first `block` variables, ties broken by grevlex on the rest. An
    /// elimination order for the first block.
    static MonomialOrder block_grevlex(std::size_t block) { return {Kind::block_grevlex, block, {}}; }

    Kind kind() const noexcept { return kind_; }
    std::size_t block() const noexcept { return block_; }
    const std::vector<std::uint8_t>& permutation() const noexcept { return perm_; }

    /// Three-way comparison over the first nvars variables: <0, 0, >0.
    int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const noexcept {
        switch (kind_) {
            case Kind::lex:
                for (std::size_t i = 0; i < nvars; ++i) {
                    std::size_t v = var(i);
                    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
                }
                return 0;
            case Kind::grevlex:
                return grevlex_range(a, b, 0, nvars);
            case Kind::block_grevlex: {
                int c = grevlex_range(a, b, 0, block_);
                return c != 0 ? c : grevlex_range(a, b, block_, nvars);
            }
        }
        return 0;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) noexcept {
        return a.kind_ == b.kind_ && a.block_ == b.block_ && a.perm_ == b.perm_;
    }

    std::string name() const {
        switch (kind_) {
            case Kind::lex: return "lex";
            case Kind::grevlex: return "grevlex";
            case Kind::block_grevlex: return "block_grevlex(" + std::to_string(block_) + ")";
        }
        return "?";
    }

   private:
    MonomialOrder(Kind k, std::size_t block, std::vector<std::uint8_t> perm)
        : kind_(k), block_(block), perm_(std::move(perm)) {}

    std::size_t var(std::size_t i) const noexcept { return perm_.empty() ? i : perm_[i]; }

    int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const noexcept {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[var(i)];
            db += b[var(i)];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            std::size_t v = var(i);
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    }

    Kind kind_ = Kind::grevlex;
    std::size_t block_ = 0;
    std::vector<std::uint8_t> perm_;
};

}  // namespace frobtest

#endif
