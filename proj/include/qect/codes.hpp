// Copyright 2026 The qect authors
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

#ifndef QECT_CODES_HPP
#define QECT_CODES_HPP

#include <iosfwd>
#include <string>

#include "qect/pauli.hpp"

namespace qect {

struct CodeParseError : std::runtime_error {
  CodeParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

/// The [[5,1,3]] code.
StabilizerCode perfect_code();

/// Rotated surface code, d in {3, 5}; generator order is semantic and
/// follows the standard plaquette listing.
StabilizerCode rotated_surface_code(uint32_t d);

/// Text format: one generator per line, an optional '+'/'-' sign followed
/// by characters in {I,X,Y,Z}; '#' starts a comment; all lines equal length.
/// Line order defines the generator indices.
StabilizerCode load_code(std::istream& in);
StabilizerCode load_code_file(const std::string& path);
StabilizerCode parse_code(const std::string& text);

std::string dump_code(const StabilizerCode& code);

}  // namespace qect

#endif
