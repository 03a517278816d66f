#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stringtop/error.hpp"

namespace stringtop::text {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping comments and blank lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline int parse_int(const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
}

inline void expect_count(const Line& line, std::size_t count, const char* usage) {
  if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected '") + usage + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace stringtop::text
