// Copyright 2026 The Spider Authors
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

#ifndef SPIDER_ERRORS_HPP_
#define SPIDER_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spider {

// Root of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or spider text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structural problem while building a Digraph from an edge sequence.
// `edge_index()` is the position of the offending edge in the input sequence.
class GraphError : public Error {
 public:
  GraphError(std::size_t edge_index, const std::string& what)
      : Error(what), edge_index_(edge_index) {}
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  std::size_t edge_index_;
};

// Some vertex has out-degree below the requested threshold.
class InsufficientOutDegree : public Error {
 public:
  InsufficientOutDegree(std::uint32_t vertex, std::size_t degree,
                        std::size_t required)
      : Error("vertex " + std::to_string(vertex) + " has out-degree " +
              std::to_string(degree) + " < " + std::to_string(required)),
        vertex_(vertex) {}
  std::uint32_t vertex() const noexcept { return vertex_; }

 private:
  std::uint32_t vertex_;
};

// A bound that holds on every correct run was observed false. Never expected
// on valid input; signals a defect upstream of the check.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Greedy leg attachment found no free partner for `vertex`.
class ExtensionExhausted : public Error {
 public:
  explicit ExtensionExhausted(std::uint32_t vertex)
      : Error("no free extension partner for vertex " + std::to_string(vertex)),
        vertex_(vertex) {}
  std::uint32_t vertex() const noexcept { return vertex_; }

 private:
  std::uint32_t vertex_;
};

// Exhaustive search refused an instance above its vertex cap.
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(std::size_t n, std::size_t cap)
      : Error("instance has " + std::to_string(n) +
              " vertices, exhaustive cap is " + std::to_string(cap)) {}
};

}  // namespace spider

#endif  // SPIDER_ERRORS_HPP_
