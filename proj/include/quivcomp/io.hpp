/*
 * Copyright 2026 The quivcomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file    io.hpp
 * @brief   Line-based text formats for quivers, modules and skeleta.
 *
 * Quiver:
 *     vertices 2
 *     arrow a1 1 -> 2
 *     arrow b1 2 -> 1
 *     loewy 4
 * Module (one block per arrow i -> j, d_j rows of d_i integers):
 *     dim 2,2
 *     mat a1
 *     1 0
 *     0 1
 * Skeleton (generator vertices first, then one path per line):
 *     top 1
 *     z1
 *     a1*z1
 *
 * '#' starts a comment. Vertices are 1-based in every file.
 */

#ifndef QUIVCOMP_IO_HPP
#define QUIVCOMP_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "quivcomp/field.hpp"
#include "quivcomp/quiver.hpp"
#include "quivcomp/rep.hpp"
#include "quivcomp/skeleta.hpp"

namespace quivcomp {

/// what() reads "line N: ..."; line 0 means the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

Algebra parse_quiver(std::string_view text);
std::string write_quiver(const Algebra& alg);

/// Entries are reduced mod p over a prime field; over F_{p^k} they must
/// already lie in [0, q). Arrows without a `mat` block get the zero map.
RepPoint parse_module(const Algebra& alg, const FiniteField& field, std::string_view text);
std::string write_module(const RepPoint& m);

Skeleton parse_skeleton(const Algebra& alg, std::string_view text);
std::string write_skeleton(const Skeleton& sk, const Algebra& alg);

/// Reads a whole file; throws std::runtime_error naming the path.
std::string read_file(const std::string& path);

}  // namespace quivcomp

#endif  // QUIVCOMP_IO_HPP
