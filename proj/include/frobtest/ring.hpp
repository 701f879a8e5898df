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

#ifndef FROBTEST_RING_HPP
#define FROBTEST_RING_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobtest/errors.hpp"
#include "frobtest/monomial.hpp"
#include "frobtest/prime_field.hpp"

namespace frobtest {

/// Polynomial ring F_p[x_1, ..., x_d] together with the monomial order its polynomials
/// are kept sorted in. Cheap to copy; shares immutable state.
class Ring {
   public:
    Ring(Prime p, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex())
        : data_(std::make_shared<const Data>(Data{p, std::move(vars), std::move(order)})) {
        const auto& v = data_->vars;
        if (v.size() > kMaxVars)
            throw InvalidInput("at most " + std::to_string(kMaxVars) + " variables are supported");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!is_identifier(v[i])) throw InvalidInput("invalid variable name '" + v[i] + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (v[i] == v[j]) throw InvalidInput("duplicate variable name '" + v[i] + "'");
        }
        const auto& perm = data_->order.permutation();
        if (!perm.empty() && perm.size() != v.size())
            throw InvalidInput("monomial order permutation does not match variable count");
    }

    Prime prime() const noexcept { return data_->p; }
    std::uint32_t p() const noexcept { return data_->p.value(); }
    std::size_t nvars() const noexcept { return data_->vars.size(); }
    const std::vector<std::string>& vars() const noexcept { return data_->vars; }
    const MonomialOrder& order() const noexcept { return data_->order; }

    int compare(const Monomial& a, const Monomial& b) const noexcept {
        return data_->order.compare(a, b, data_->vars.size());
    }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < data_->vars.size(); ++i)
            if (data_->vars[i] == name) return i;
        return std::nullopt;
    }

    Ring with_order(MonomialOrder order) const { return Ring(prime(), vars(), std::move(order)); }

    /// Same variables with the given ones in front.
    Ring with_leading_vars(const std::vector<std::string>& extra, MonomialOrder order) const {
        std::vector<std::string> v = extra;
        v.insert(v.end(), vars().begin(), vars().end());
        return Ring(prime(), std::move(v), std::move(order));
    }

    Ring without_var(std::size_t i) const {
        std::vector<std::string> v = vars();
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        return Ring(prime(), std::move(v), order().kind() == MonomialOrder::Kind::lex ? MonomialOrder::lex()
                                                                                      : MonomialOrder::grevlex());
    }

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.data_ == b.data_ ||
               (a.data_->p == b.data_->p && a.data_->vars == b.data_->vars && a.data_->order == b.data_->order);
    }

    static bool is_identifier(const std::string& s) noexcept {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char c : s)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
        return true;
    }

   private:
    struct Data {
        Prime p;
        std::vector<std::string> vars;
        MonomialOrder order;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace frobtest

#endif
