#include "ckforms/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ckforms/errors.hpp"

namespace ckforms {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::toupper(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  return true;
}

}  // namespace

PairSpec parse_pair(std::string_view text) {
  std::size_t offset = 0;
  std::string_view s = trim(text, offset);
  if (s.empty()) throw ParseError("empty pair", 0, "G/H or GROUP(H)");
  if (auto ws = std::find_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      ws != s.end())
    throw ParseError("whitespace inside pair", offset + static_cast<std::size_t>(ws - s.begin()), "no whitespace");

  if (starts_with_ci(s, "GROUP(")) {
    if (s.back() != ')') throw ParseError("missing ')' closing GROUP", offset + s.size(), "')'");
    const std::string_view inner = s.substr(6, s.size() - 7);
    AlgebraSpec h = parse_algebra_spec(inner, offset + 6);
    return make_group_space(h);
  }
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) throw ParseError("missing '/'", offset + s.size(), "'/' between G and H");
  if (s.find('/', slash + 1) != std::string_view::npos)
    throw ParseError("more than one '/'", offset + s.find('/', slash + 1), "single '/'");
  AlgebraSpec g = parse_algebra_spec(s.substr(0, slash), offset);
  AlgebraSpec h = parse_algebra_spec(s.substr(slash + 1), offset + slash + 1);
  PairSpec ps = make_pair(g, h);
  if (!is_supported_pair(ps))
    throw ParseError("unsupported pair " + ps.to_string(), offset,
                     "a block embedding, a real form in a complexification, or GROUP(H)");
  return ps;
}

}  // namespace ckforms
