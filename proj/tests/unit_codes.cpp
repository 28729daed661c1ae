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

#include <string>

#include "doctest.h"
#include "qect/codes.hpp"
#include "qect/enumerator.hpp"

using namespace qect;

TEST_CASE("perfect code structure") {
  auto code = perfect_code();
  CHECK(code.length() == 5);
  CHECK(code.dimension() == 1);
  CHECK(code.generators().size() == 4);
  for (size_t i = 0; i < 4; i++)
    for (size_t j = i + 1; j < 4; j++)
      CHECK(commutes(code.generators()[i].pauli, code.generators()[j].pauli));

  auto [a, b] = shor_laflamme(code);
  // distance = first degree where the normalizer outgrows the stabilizer
  auto diff = b - a;
  REQUIRE(!diff.is_zero());
  CHECK(total_degree(diff.terms().begin()->first) == 3);
}

TEST_CASE("rotated surface codes") {
  auto d3 = rotated_surface_code(3);
  CHECK(d3.length() == 9);
  CHECK(d3.dimension() == 1);
  CHECK(d3.generators().size() == 8);
  int weight4 = 0, weight2 = 0;
  for (const auto& g : d3.generators()) {
    if (g.pauli.weight() == 4) weight4++;
    if (g.pauli.weight() == 2) weight2++;
  }
  CHECK(weight4 == 4);
  CHECK(weight2 == 4);

  auto [a3, b3] = shor_laflamme(d3);
  CHECK(b3.evaluate({{"z", Coeff::exact(1)}}) == Coeff::exact(1024));
  CHECK(a3.evaluate({{"z", Coeff::exact(1)}}) == Coeff::exact(256));
  auto diff = b3 - a3;
  REQUIRE(!diff.is_zero());
  CHECK(total_degree(diff.terms().begin()->first) == 3);

  auto d5 = rotated_surface_code(5);
  CHECK(d5.length() == 25);
  CHECK(d5.generators().size() == 24);

  CHECK_THROWS_AS(rotated_surface_code(4), PauliError);
}

TEST_CASE("code file round trips") {
  auto code = perfect_code();
  auto reloaded = parse_code(dump_code(code));
  CHECK(reloaded.generators().size() == code.generators().size());
  for (size_t i = 0; i < 4; i++)
    CHECK(reloaded.generators()[i] == code.generators()[i]);

  for (uint32_t d : {3u, 5u}) {
    auto c = rotated_surface_code(d);
    CHECK(dump_code(parse_code(dump_code(c))) == dump_code(c));
  }
}

TEST_CASE("code files accept comments, signs and blank lines") {
  auto code = parse_code(
      "# a two qubit code\n"
      "+XX   # first generator\n"
      "\n"
      "-ZZ\n");
  CHECK(code.length() == 2);
  CHECK(code.generators()[0] == SignedPauli::from_label("XX"));
  CHECK(code.generators()[1] == SignedPauli::from_label("-ZZ"));
}

TEST_CASE("code file diagnostics carry line numbers") {
  // repeated generator: independence failure on line 2
  try {
    parse_code("XZZXI\nXZZXI\n");
    FAIL("expected a parse error");
  } catch (const CodeParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("dependent") != std::string::npos);
  }

  // anticommuting pair names both lines
  try {
    parse_code("XIIII\nZIIII\n");
    FAIL("expected a parse error");
  } catch (const CodeParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_code("XZ\nXQZ\n"), CodeParseError);
  CHECK_THROWS_AS(parse_code("XZ\nXZI\n"), CodeParseError);  // ragged lengths
  CHECK_THROWS_AS(parse_code("# only a comment\n"), CodeParseError);
}
