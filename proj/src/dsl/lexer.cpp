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

#include "dsl/lexer.hpp"

#include <cctype>

namespace gpt_tomo::dsl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& file) : text_(text), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      const Position start = pos_;
      if (at_end()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      const char c = peek();
      if (ident_start(c)) {
        std::string word;
        while (!at_end() && ident_char(peek())) word += advance();
        out.push_back({Tok::Ident, word, start});
      } else if (digit(c) || ((c == '-' || c == '+') && digit(peek(1)))) {
        out.push_back({Tok::Number, number(), start});
      } else if (c == '-' && peek(1) == '>') {
        advance();
        advance();
        out.push_back({Tok::Arrow, "->", start});
      } else if (c == '|' && peek(1) == '|') {
        advance();
        advance();
        out.push_back({Tok::Bar2, "||", start});
      } else {
        Tok kind;
        switch (c) {
          case ';': kind = Tok::Semi; break;
          case ',': kind = Tok::Comma; break;
          case '=': kind = Tok::Equals; break;
          case '.': kind = Tok::Dot; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '[': kind = Tok::LBracket; break;
          case ']': kind = Tok::RBracket; break;
          default: {
            const unsigned char u = static_cast<unsigned char>(c);
            std::string shown = (u >= 0x20 && u < 0x7f) ? std::string(1, c)
                                                        : "\\x" + hex(u);
            throw DslError({file_, start, "unexpected character '" + shown + "'"});
          }
        }
        out.push_back({kind, std::string(1, advance()), start});
      }
    }
  }

 private:
  static std::string hex(unsigned char u) {
    const char* digits = "0123456789abcdef";
    return {digits[u >> 4], digits[u & 15]};
  }

  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  char advance() {
    const char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    return c;
  }

  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  // [+-] digits [. digits] [(e|E) [+-] digits]. A '.' not followed by a digit
  // is left for the sequencing operator.
  std::string number() {
    std::string s;
    if (peek() == '-' || peek() == '+') s += advance();
    while (digit(peek())) s += advance();
    if (peek() == '.' && digit(peek(1))) {
      s += advance();
      while (digit(peek())) s += advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (digit(peek(1)) || ((peek(1) == '-' || peek(1) == '+') && digit(peek(2))))) {
      s += advance();
      if (peek() == '-' || peek() == '+') s += advance();
      while (digit(peek())) s += advance();
    }
    return s;
  }

  std::string_view text_;
  const std::string& file_;
  std::size_t i_ = 0;
  Position pos_;
};

}  // namespace

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text, const std::string& file) {
  return Lexer(text, file).run();
}

}  // namespace gpt_tomo::dsl
