// Copyright 2026 The gpt-tomo Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpt_tomo/dsl.hpp"

namespace gpt_tomo::dsl {

enum class Tok {
  Ident,
  Number,
  Semi,
  Comma,
  Equals,
  Arrow,
  Dot,
  Bar2,
  LParen,
  RParen,
  LBracket,
  RBracket,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  Position pos;
};

/// Human-readable token description for diagnostics, e.g. "'.'".
std::string describe(const Token& t);

/// Splits `text` into tokens ending with Tok::End. Throws DslError on a
/// character that starts no token.
std::vector<Token> lex(std::string_view text, const std::string& file);

}  // namespace gpt_tomo::dsl
