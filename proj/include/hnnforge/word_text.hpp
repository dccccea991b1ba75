#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hnnforge/gword.hpp"

// Shared word grammar:
//   word    := term { term }
//   term    := letter [ "^" integer ]
//   letter  := "a" | "b" | "t"
//   integer := ["-"] digit { digit }
// Whitespace between terms is ignored; exponent 0 yields the identity term.
// The generic-letter variant serves presentation files, where the alphabet
// is declared in the file itself.

namespace hnnforge {

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// integer after '^'; empty when the term has no exponent (meaning 1)
inline BigInt parse_exponent(std::string_view s, std::size_t& i) {
  if (i >= s.size() || s[i] != '^') return BigInt(1);
  ++i;
  skip_ws(s, i);
  std::string digits;
  if (i < s.size() && s[i] == '-') {
    digits += '-';
    ++i;
  }
  std::size_t start = digits.size();
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (digits.size() == start)
    throw WordParseError("expected digits after '^' at offset " + std::to_string(i));
  return BigInt(digits);
}

inline void append_pow_token(std::string& out, char letter, const BigInt& e) {
  if (e.is_zero()) return;
  if (!out.empty()) out += ' ';
  out += letter;
  if (e != 1) out += "^" + e.str();
}

}  // namespace detail

inline GWord parse_word(std::string_view text) {
  GWord w = GWord::identity();
  std::size_t i = 0;
  for (;;) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    char letter = text[i++];
    if (letter != 'a' && letter != 'b' && letter != 't')
      throw WordParseError(std::string("unexpected character '") + letter + "' at offset " +
                           std::to_string(i - 1));
    BigInt e = detail::parse_exponent(text, i);
    if (letter == 'a') {
      w.append_h(HElement::a_pow(e));
    } else if (letter == 'b') {
      w.append_h(HElement::b_pow(e));
    } else {
      BigInt count_big = abs(e);
      if (count_big > config::syllable_cap())
        throw ResourceLimitError("t-exponent exceeds syllable cap");
      int sign = e.sign() < 0 ? -1 : +1;
      auto count = count_big.convert_to<unsigned long long>();
      for (unsigned long long c = 0; c < count; ++c) w.append_t(sign);
    }
  }
  return w;
}

// H-element as a word over a,b: (q,k) with q = num/2^e prints b^e a^num b^{k-e}.
inline std::string h_element_text(const HElement& h) {
  std::string out;
  detail::append_pow_token(out, 'b', h.q.exp());
  detail::append_pow_token(out, 'a', h.q.num());
  detail::append_pow_token(out, 'b', h.k - h.q.exp());
  return out;
}

// Grammar-compatible rendering; identity prints as "a^0" so it reparses.
inline std::string print_word(const GWord& w) {
  std::string out = h_element_text(w.head());
  const auto& tail = w.tail();
  std::size_t i = 0;
  while (i < tail.size()) {
    std::size_t j = i + 1;
    while (j < tail.size() && tail[j].sign == tail[i].sign && h_is_identity(tail[j - 1].h)) ++j;
    long long run = static_cast<long long>(j - i) * tail[i].sign;
    if (!out.empty()) out += ' ';
    out += 't';
    if (run != 1) out += "^" + std::to_string(run);
    std::string slot = h_element_text(tail[j - 1].h);
    if (!slot.empty()) {
      out += ' ';
      out += slot;
    }
    i = j;
  }
  if (out.empty()) out = "a^0";
  return out;
}

// Generic-letter terms for presentation files.
struct GenTerm {
  int gen;
  long long exp;
};

inline std::vector<GenTerm> parse_gen_word(std::string_view text,
                                           const std::map<char, int>& alphabet) {
  std::vector<GenTerm> out;
  std::size_t i = 0;
  for (;;) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    char letter = text[i++];
    auto it = alphabet.find(letter);
    if (it == alphabet.end())
      throw WordParseError(std::string("undeclared generator '") + letter + "'");
    BigInt e = detail::parse_exponent(text, i);
    if (abs(e) > BigInt(1'000'000'000))
      throw WordParseError("exponent out of range in presentation word");
    if (!e.is_zero()) out.push_back(GenTerm{it->second, e.convert_to<long long>()});
  }
  return out;
}

// u-list file format: integers separated by commas and/or whitespace,
// lines starting with '#' ignored.
inline std::vector<long long> parse_ulist(std::string_view text) {
  constexpr long long MAX_ABS_U = 1'000'000'000'000LL;
  constexpr std::size_t MAX_ENTRIES = 100'000;  // keeps validate() sums in int64
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    std::size_t i = 0;
    detail::skip_ws(line, i);
    if (i < line.size() && line[i] == '#') continue;
    while (i < line.size()) {
      if (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::string tok;
      if (line[i] == '-') tok += line[i++];
      std::size_t digits_from = tok.size();
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) tok += line[i++];
      if (tok.size() == digits_from)
        throw WordParseError(std::string("malformed u-list near '") + line[i] + "'");
      long long value = 0;
      try {
        value = std::stoll(tok);
      } catch (const std::exception&) {
        throw WordParseError("u-list entry out of range: " + tok);
      }
      if (value > MAX_ABS_U || value < -MAX_ABS_U)
        throw WordParseError("u-list entry out of range: " + tok);
      if (out.size() >= MAX_ENTRIES) throw WordParseError("u-list too long");
      out.push_back(value);
    }
  }
  return out;
}

}  // namespace hnnforge
