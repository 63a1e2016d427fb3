// Copyright 2026 The fibeq Authors
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

#ifndef FIBEQ_ERRORS_HPP_
#define FIBEQ_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibeq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent run configuration: mixed widths, bad width, bad table index.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Wrong number of inputs for an operation (e.g. fewer than two tables).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A table entry that cannot exist in the table's address space.
class MalformedEntryError : public Error {
 public:
  MalformedEntryError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Syntax error in a table file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A request that cannot be satisfied within the address space or table
// (too many distinct prefixes, no room for disjoint errors, enumeration too
// large).
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibeq

#endif  // FIBEQ_ERRORS_HPP_
