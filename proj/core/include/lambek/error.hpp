// Copyright 2026 The Lambek Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAMBEK_ERROR_HPP_
#define LAMBEK_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lambek {

// Base of every exception thrown by the library.
class LambekError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed category, term, sequent, lexicon or extension text.
class SyntaxError : public LambekError {
 public:
  SyntaxError(const std::string& what, std::size_t position, std::size_t line = 0)
      : LambekError(what), position_(position), line_(line) {}

  // Byte offset into the parsed text.
  std::size_t position() const { return position_; }
  // 1-based line number for line-oriented inputs, 0 otherwise.
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

// A Path step left the term it was applied to.
class PathError : public LambekError {
 public:
  PathError(const std::string& what, std::size_t failing_step)
      : LambekError(what), failing_step_(failing_step) {}
  std::size_t failing_step() const { return failing_step_; }

 private:
  std::size_t failing_step_;
};

// An operation that needs a finished proof tree met an Unf leaf.
class UnfinishedProofError : public LambekError {
 public:
  using LambekError::LambekError;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public LambekError {
 public:
  using LambekError::LambekError;
};

enum class CheckErrorKind {
  kRuleMismatch,
  kArity,
  kExtensionMismatch,
  kUnfinished,
  kObligation,
};

const char* to_string(CheckErrorKind kind);

// Failure report of a proof checker. `tree_path` lists child indices from
// the root of the checked tree down to the offending node.
struct CheckError {
  CheckErrorKind kind = CheckErrorKind::kRuleMismatch;
  std::string message;
  std::vector<std::size_t> tree_path;

  std::string describe() const;
};

// Value-or-CheckError, in the spirit of absl::StatusOr.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}           // NOLINT(google-explicit-constructor)
  Result(CheckError error) : state_(std::move(error)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw LambekError(error().describe());
    return std::get<0>(state_);
  }
  T&& value() && {
    if (!ok()) throw LambekError(error().describe());
    return std::get<0>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const CheckError& error() const { return std::get<1>(state_); }

 private:
  std::variant<T, CheckError> state_;
};

// Result for checks that carry no value on success.
struct Ok {};
using Status = Result<Ok>;

}  // namespace lambek

#endif  // LAMBEK_ERROR_HPP_
