#include "rigidity/edge_list_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                    " tokens");
    }
    const std::int64_t a = parse_int(tokens[0], line_no);
    const std::int64_t b = parse_int(tokens[1], line_no);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(line_no, "vertex and edge counts must be >= 0");
      n = a;
      m = b;
      pairs.reserve(static_cast<std::size_t>(std::min<std::int64_t>(m, 1 << 20)));
      continue;
    }
    if (static_cast<std::int64_t>(pairs.size()) == m) {
      throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (a == b) throw ParseError(line_no, "loop edge at vertex " + std::to_string(a));
    pairs.emplace_back(a, b);
  }
  if (n < 0) throw ParseError(line_no + 1, "missing 'n m' header");
  if (static_cast<std::int64_t>(pairs.size()) != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(pairs.size()));
  }
  return graph_from_edge_list(static_cast<std::size_t>(n), pairs);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace rigidity
