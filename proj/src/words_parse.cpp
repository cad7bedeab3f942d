#include "braids/words_parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "braids/errors.hpp"

namespace braids {

namespace {

struct Token {
  char kind;      // 's', 't', or 'd'
  bool inverted;  // from uppercase S
  int index;
  long long exponent;
};

Token lex_token(const std::string& tok, int pos) {
  if (tok.empty()) throw ParseError(pos, "empty token");
  size_t at = 0;
  char k = tok[at];
  bool inverted = false;
  if (k == 'S') {
    k = 's';
    inverted = true;
  }
  if (k != 's' && k != 't' && k != 'd')
    throw ParseError(pos, "unknown generator kind '" + std::string(1, tok[at]) + "' in \"" + tok +
                              "\"");
  ++at;
  size_t digits = at;
  while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
  if (digits == at) throw ParseError(pos, "missing generator index in \"" + tok + "\"");
  int index;
  try {
    index = std::stoi(tok.substr(at, digits - at));
  } catch (const std::exception&) {
    throw ParseError(pos, "generator index out of range in \"" + tok + "\"");
  }
  long long exponent = 1;
  if (digits < tok.size()) {
    if (tok[digits] != '^') throw ParseError(pos, "expected '^' in \"" + tok + "\"");
    std::string exp = tok.substr(digits + 1);
    if (exp.empty() || (!std::isdigit(static_cast<unsigned char>(exp[0])) && exp[0] != '-'))
      throw ParseError(pos, "malformed exponent in \"" + tok + "\"");
    try {
      exponent = std::stoll(exp);
    } catch (const std::exception&) {
      throw ParseError(pos, "malformed exponent in \"" + tok + "\"");
    }
  }
  return Token{k, inverted, index, exponent};
}

SingularWord parse_tokens(const std::string& text, std::optional<int> n, bool allow_singular) {
  std::istringstream in(text);
  std::vector<Token> tokens;
  std::string raw;
  int pos = 0;
  int max_index = 0;
  while (in >> raw) {
    ++pos;
    Token t = lex_token(raw, pos);
    if (!allow_singular && t.kind != 's')
      throw ParseError(pos, "singular letter '" + raw + "' not allowed here");
    if (t.kind != 's' && t.exponent < 1)
      throw ParseError(pos, "exponent on " + std::string(1, t.kind) +
                                " must be >= 1 in \"" + raw + "\"");
    if (t.index < 1) throw ParseError(pos, "generator index must be >= 1 in \"" + raw + "\"");
    if (std::abs(t.exponent) > 10000) throw ParseError(pos, "exponent too large in \"" + raw + "\"");
    max_index = std::max(max_index, t.index);
    tokens.push_back(t);
  }
  int strands = n.value_or(max_index + 1);
  SingularWord w(strands);
  pos = 0;
  for (const Token& t : tokens) {
    ++pos;
    if (t.index > strands - 1)
      throw ParseError(pos, "generator index " + std::to_string(t.index) +
                                " out of range for n=" + std::to_string(strands));
    if (t.kind == 's') {
      int sign = (t.inverted ? -1 : 1) * (t.exponent >= 0 ? 1 : -1);
      for (long long r = 0; r < std::llabs(t.exponent); ++r) w.push_sigma(t.index, sign);
    } else {
      for (long long r = 0; r < t.exponent; ++r) {
        if (t.kind == 't')
          w.push_tau(t.index);
        else
          w.push_delta(t.index);
      }
    }
  }
  return w;
}

}  // namespace

SingularWord parse_singular_word(const std::string& text, std::optional<int> n) {
  return parse_tokens(text, n, true);
}

BraidWord parse_braid_word(const std::string& text, std::optional<int> n) {
  SingularWord s = parse_tokens(text, n, false);
  BraidWord w(s.n);
  for (const auto& l : s.letters) w.push(l.index, l.sign);
  return w;
}

}  // namespace braids
