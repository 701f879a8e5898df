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

#ifndef FROBTEST_ERRORS_HPP
#define FROBTEST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobtest {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad prime, boundary coefficient > 1, parse errors, ...).
class InvalidInput : public Error {
   public:
    using Error::Error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
   public:
    RingMismatch() : Error("ring context mismatch") {}
    explicit RingMismatch(const std::string& what) : Error("ring context mismatch: " + what) {}
};

class ExponentOverflow : public Error {
   public:
    using Error::Error;
};

/// A computation hit its configured work cap. Never converted into an approximate answer.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

}  // namespace frobtest

#endif
