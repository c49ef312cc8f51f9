#include "arbor/dynamics/parse.hpp"

#include <charconv>
#include <string>

#include "arbor/error.hpp"
#include "arbor/tree/parse.hpp"

namespace arbor::dynamics {

namespace {

[[noreturn]] void fail(std::size_t column, const std::string& msg) {
  throw Error(ErrorKind::kParse, "map: " + msg + " at column " + std::to_string(column + 1));
}

}  // namespace

std::vector<tree::Vertex> parse_map_spec(std::string_view text, int vertex_count) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size() || text[pos] != '(') {
    const std::vector<int> image = tree::parse_int_list(text, "map");
    return {image.begin(), image.end()};
  }

  std::vector<tree::Vertex> image(static_cast<std::size_t>(vertex_count));
  for (int v = 1; v <= vertex_count; ++v) image[static_cast<std::size_t>(v - 1)] = v;
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count) + 1, false);
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail(pos, "expected '('");
    ++pos;
    std::vector<tree::Vertex> cycle;
    while (true) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos == text.size()) fail(pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      int value = 0;
      const auto res = std::from_chars(text.data() + start, text.data() + pos, value);
      if (pos == start || res.ec != std::errc()) fail(start, "expected a vertex label");
      if (value < 1 || value > vertex_count || seen[static_cast<std::size_t>(value)]) {
        throw Error(ErrorKind::kNotPermutation, "cycle entry " + std::to_string(value) +
                                                    " at column " + std::to_string(start + 1) +
                                                    " is out of range or repeated");
      }
      seen[static_cast<std::size_t>(value)] = true;
      cycle.push_back(value);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      image[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return image;
}

}  // namespace arbor::dynamics
