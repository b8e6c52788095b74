/*
   Copyright 2026 The lregcong Authors

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

#ifndef LREGCONG_ERROR_HPP
#define LREGCONG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lregcong {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or a violated precondition.
class UsageError : public Error {
   public:
    using Error::Error;
};

// Mathematically undefined request, e.g. inverting a series with a non-unit constant term.
class DomainError : public Error {
   public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
   public:
    ArithmeticOverflow(const std::string& what, std::size_t index)
        : Error(what + " (overflow at index " + std::to_string(index) + ")"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
};

// A series or scan bound is too small (or a configured cap too low) for the request.
class PrecisionShortfall : public Error {
   public:
    PrecisionShortfall(const std::string& what, std::size_t required)
        : Error(what + " (required precision " + std::to_string(required) + ")"), required_(required) {}

    std::size_t required() const noexcept { return required_; }

   private:
    std::size_t required_;
};

// A checked identity or congruence failed on concrete data.
class ViolationError : public Error {
   public:
    using Error::Error;
};

// Something the library itself guarantees did not hold; indicates a bug or a bypassed check.
class InternalConsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace lregcong

#endif  // LREGCONG_ERROR_HPP
