// Copyright 2026 The rcperm Authors
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

#ifndef RCPERM_ERRORS_H_
#define RCPERM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rcperm {

enum class ParseErrorKind { kEmpty, kMalformed, kDuplicate, kOutOfRange };

// Raised when permutation text (or a value vector) is not a rearrangement
// of 1..n. The kind distinguishes the failure so callers can report it.
class ParseError : public std::invalid_argument {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

// A size guard was exceeded (brute-force oracles, exhaustive search).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cache file exists but cannot be trusted.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The constructive partition emitted a piece that is not monotone.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcperm

#endif  // RCPERM_ERRORS_H_
