// diarmap/include/diarmap/error.h
//
// Copyright (c) 2026 The diarmap Authors
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

#ifndef DIARMAP_ERROR_H_
#define DIARMAP_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diarmap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed RTTM input. `line()` is 1-based. With a source the message
// reads "source:line: detail", otherwise "line N: detail".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &detail,
             const std::string &source = {})
      : Error(source.empty()
                  ? "line " + std::to_string(line) + ": " + detail
                  : source + ":" + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const { return line_; }
  const std::string &detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// A partition that is not orthogonal or does not cover the graph.
class PartitionError : public Error {
 public:
  using Error::Error;
};

// Maximal clique enumeration would exceed the configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exhaustive search space larger than the configured cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace diarmap

#endif  // DIARMAP_ERROR_H_
