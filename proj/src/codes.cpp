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

#include "qect/codes.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qect {

StabilizerCode perfect_code() {
  return StabilizerCode({
      SignedPauli::from_label("XZZXI"),
      SignedPauli::from_label("IXZZX"),
      SignedPauli::from_label("XIXZZ"),
      SignedPauli::from_label("ZXIXZ"),
  });
}

StabilizerCode rotated_surface_code(uint32_t d) {
  if (d == 3) {
    return StabilizerCode({
        SignedPauli::from_label("ZZIZZIIII"),
        SignedPauli::from_label("IIIIZZIZZ"),
        SignedPauli::from_label("IXXIXXIII"),
        SignedPauli::from_label("IIIXXIXXI"),
        SignedPauli::from_label("IIZIIZIII"),
        SignedPauli::from_label("IIIZIIZII"),
        SignedPauli::from_label("XXIIIIIII"),
        SignedPauli::from_label("IIIIIIIXX"),
    });
  }
  if (d == 5) {
    return StabilizerCode({
        SignedPauli::from_label("ZZIIIZZIIIIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIZZIIIZZIIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIZZIIIZZIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIZZIIIZZIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIZZIIIZZIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIZZIIIZZIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIIZZIIIZZII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIIIIZZIIIZZ"),
        SignedPauli::from_label("IXXIIIXXIIIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIXXIIIXXIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIXXIIIXXIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIXXIIIXXIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIXXIIIXXIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIXXIIIXXIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIXXIIIXXIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIIIXXIIIXXI"),
        SignedPauli::from_label("IIIIZIIIIZIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIZIIIIZIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIZIIIIZIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIZIIIIZIIII"),
        SignedPauli::from_label("XXIIIIIIIIIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIIIIIIIXXII"),
        SignedPauli::from_label("IIXXIIIIIIIIIIIIIIIIIIIII"),
        SignedPauli::from_label("IIIIIIIIIIIIIIIIIIIIIIIXX"),
    });
  }
  throw PauliError("rotated surface code supports d in {3, 5}");
}

StabilizerCode load_code(std::istream& in) {
  std::vector<SignedPauli> gens;
  std::vector<int> source_lines;
  std::string line;
  int lineno = 0;
  size_t width = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);

    std::string body = tok;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.erase(0, 1);
    if (body.empty()) throw CodeParseError(lineno, "empty generator");
    for (char c : body)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw CodeParseError(lineno, std::string("invalid character '") + c + "'");
    if (width == 0)
      width = body.size();
    else if (body.size() != width)
      throw CodeParseError(lineno, "generator length " + std::to_string(body.size()) +
                                       " does not match earlier length " +
                                       std::to_string(width));
    gens.push_back(SignedPauli::from_label(tok));
    source_lines.push_back(lineno);
  }
  if (gens.empty()) throw CodeParseError(lineno, "no generators found");

  // Re-run the structural checks here so diagnostics can cite source lines.
  for (size_t i = 0; i < gens.size(); i++)
    for (size_t j = i + 1; j < gens.size(); j++)
      if (!commutes(gens[i].pauli, gens[j].pauli))
        throw CodeParseError(source_lines[j],
                             "generator anticommutes with the one on line " +
                                 std::to_string(source_lines[i]));

  // Incremental GF(2) rank so a dependent generator is reported by line.
  {
    uint32_t n = gens[0].num_qubits();
    std::vector<std::vector<uint8_t>> reduced;
    std::vector<size_t> pivot_of;
    for (size_t g = 0; g < gens.size(); g++) {
      std::vector<uint8_t> row(2 * n, 0);
      for (uint32_t i = 0; i < n; i++) {
        row[i] = gens[g].pauli.x_bit(i);
        row[n + i] = gens[g].pauli.z_bit(i);
      }
      for (size_t r = 0; r < reduced.size(); r++)
        if (row[pivot_of[r]])
          for (size_t c = 0; c < 2 * n; c++) row[c] ^= reduced[r][c];
      size_t piv = 0;
      while (piv < 2 * n && !row[piv]) piv++;
      if (piv == 2 * n)
        throw CodeParseError(source_lines[g],
                             "generator is dependent on earlier generators");
      reduced.push_back(std::move(row));
      pivot_of.push_back(piv);
    }
  }
  return StabilizerCode(gens);
}

StabilizerCode load_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open code file: " + path);
  return load_code(f);
}

StabilizerCode parse_code(const std::string& text) {
  std::istringstream ss(text);
  return load_code(ss);
}

std::string dump_code(const StabilizerCode& code) {
  std::string out;
  for (const auto& g : code.generators()) {
    if (g.phase == Phase::minus_one()) out += "-";
    out += g.pauli.str();
    out += "\n";
  }
  return out;
}

}  // namespace qect
