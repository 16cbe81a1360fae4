// hexio.hpp
//
// Symbol vectors as whitespace-separated hexadecimal tokens, the wire
// format of the CLI's encode/decode streams.

#pragma once

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "trs/gf.hpp"
#include "trs/words.hpp"

namespace trs {

// Parse error carrying the offending token.
class HexParseError : public std::runtime_error {
 public:
  HexParseError(const std::string& token, std::uint32_t q)
      : std::runtime_error("invalid symbol token '" + token +
                           "' (expected hex value < " + std::to_string(q) +
                           ")"),
        token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

inline Symbol parse_symbol(const std::string& token, std::uint32_t q) {
  if (token.empty() || token.size() > 8) throw HexParseError(token, q);
  std::uint32_t value = 0;
  for (char c : token) {
    const char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::uint32_t digit;
    if (lc >= '0' && lc <= '9') {
      digit = static_cast<std::uint32_t>(lc - '0');
    } else if (lc >= 'a' && lc <= 'f') {
      digit = static_cast<std::uint32_t>(lc - 'a' + 10);
    } else {
      throw HexParseError(token, q);
    }
    value = (value << 4) | digit;
  }
  if (value >= q) throw HexParseError(token, q);
  return static_cast<Symbol>(value);
}

// Reads exactly `count` symbols; complains about the first malformed,
// out-of-range, missing, or surplus token.
inline Word read_symbols(std::istream& in, std::size_t count,
                         std::uint32_t q) {
  Word out;
  out.reserve(count);
  std::string token;
  while (out.size() < count && (in >> token)) {
    out.push_back(parse_symbol(token, q));
  }
  if (out.size() < count) {
    throw std::runtime_error("expected " + std::to_string(count) +
                             " symbols, got " + std::to_string(out.size()));
  }
  return out;
}

inline std::string format_symbols(std::span<const Symbol> symbols) {
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0) os << ' ';
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%x", static_cast<unsigned>(symbols[i]));
    os << buf;
  }
  return os.str();
}

}  // namespace trs
