#include "arbor/tree/parse.hpp"

#include <charconv>
#include <string>

#include "arbor/error.hpp"
#include "arbor/tree/prufer.hpp"

namespace arbor::tree {

namespace {

[[noreturn]] void fail(std::string_view what, std::size_t column, const std::string& msg) {
  throw Error(ErrorKind::kParse,
              std::string(what) + ": " + msg + " at column " + std::to_string(column + 1));
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
}

int read_int(std::string_view s, std::size_t& pos, std::string_view what) {
  skip_spaces(s, pos);
  const std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  int value = 0;
  const char* first = s.data() + start + (start < s.size() && s[start] == '+' ? 1 : 0);
  const auto res = std::from_chars(first, s.data() + pos, value);
  if (res.ec != std::errc() || res.ptr != s.data() + pos) fail(what, start, "expected an integer");
  skip_spaces(s, pos);
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) return out;
  while (true) {
    out.push_back(read_int(text, pos, what));
    if (pos == text.size()) break;
    if (text[pos] != ',') fail(what, pos, std::string("unexpected '") + text[pos] + "'");
    ++pos;
  }
  return out;
}

Tree parse_tree_spec(std::string_view text) {
  constexpr std::string_view what = "tree";
  if (text.find('-') == std::string_view::npos) {
    const std::vector<int> code = parse_int_list(text, what);
    return decode_prufer(code);
  }
  auto read_label = [&](std::size_t& pos) {
    skip_spaces(text, pos);
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    int value = 0;
    const auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (pos == start || res.ec != std::errc()) fail(what, start, "expected a vertex label");
    skip_spaces(text, pos);
    return value;
  };
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (true) {
    Edge e;
    e.a = read_label(pos);
    if (pos == text.size() || text[pos] != '-') fail(what, pos, "expected '-'");
    ++pos;
    e.b = read_label(pos);
    edges.push_back(e);
    if (pos == text.size()) break;
    if (text[pos] != ',') fail(what, pos, std::string("unexpected '") + text[pos] + "'");
    ++pos;
  }
  return Tree::from_edges(std::move(edges));
}

}  // namespace arbor::tree
