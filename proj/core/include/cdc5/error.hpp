// Copyright 2026 The cdc5 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CDC5_ERROR_HPP
#define CDC5_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdc5 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte position that failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The value exists but cannot be expressed in the requested format.
class FormatError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A cubic input with a cut-edge; such graphs have no cycle double cover.
class BridgedGraphError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The graph passed to a 4-CDC construction has no nowhere-zero 4-flow.
class FlowMissingError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// One of the three conditions of the (k+3)-CDC assembly failed.
/// `witness` holds edge identifiers demonstrating the failure.
class ConditionError : public PreconditionError {
public:
    ConditionError(int condition, std::vector<int> witness, const std::string& what)
        : PreconditionError("condition " + std::to_string(condition) + " violated: " + what),
          condition_(condition), witness_(std::move(witness)) {}

    int condition() const noexcept { return condition_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    int condition_;
    std::vector<int> witness_;
};

/// A configured guard stopped the computation before it finished. This is
/// never a definitive negative answer.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure: a constructed object did not verify.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace cdc5

#endif  // CDC5_ERROR_HPP
