// Copyright 2026 The Eigenlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace eigenlogic {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Requested operator dimension exceeds the configured cap.
class CapacityError : public Error {
   public:
    CapacityError(std::size_t requested, std::size_t cap)
        : Error("dimension " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t cap() const noexcept { return cap_; }

   private:
    std::size_t requested_;
    std::size_t cap_;
};

class ArityMismatchError : public Error {
   public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
   public:
    using Error::Error;
};

/// Malformed value: wrong length, non-finite entries, bad alphabet, ...
class InvalidArgumentError : public Error {
   public:
    using Error::Error;
};

/// An eigenvalue matched no truth value of the alphabet.
class NonMemberError : public Error {
   public:
    NonMemberError(std::size_t index, double value)
        : Error("eigenvalue " + std::to_string(value) + " at index " + std::to_string(index) +
                " is not a member of the alphabet"),
          index_(index),
          value_(value) {}

    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

   private:
    std::size_t index_;
    double value_;
};

/// Observable is not of the class (projective / isometric) an operation needs.
class ClassificationError : public Error {
   public:
    using Error::Error;
};

class DuplicatePointError : public Error {
   public:
    using Error::Error;
};

class PositionError : public Error {
   public:
    using Error::Error;
};

class UnknownConnectiveError : public Error {
   public:
    using Error::Error;
};

class ConventionError : public Error {
   public:
    using Error::Error;
};

class IncompatibleAlphabetError : public Error {
   public:
    using Error::Error;
};

/// A formula variable resolves to no argument position below the arity.
class UnresolvedVariableError : public Error {
   public:
    using Error::Error;
};

class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, std::string expected)
        : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string &expected() const noexcept { return expected_; }

   private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace eigenlogic
