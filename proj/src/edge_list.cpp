#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spreadlab/error.hpp"
#include "spreadlab/graph_io.hpp"

namespace spreadlab {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

bool skippable(const std::string& line) {
  auto it = std::find_if_not(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
  return it == line.end() || *it == '#';
}

// Exactly two non-negative integers separated by whitespace.
bool read_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream in(line);
  std::string first, second, extra;
  if (!(in >> first >> second) || (in >> extra)) return false;
  auto parse = [](const std::string& token, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
  };
  return parse(first, a) && parse(second, b);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::uint64_t parse_uint(const std::string& token, const std::string& context) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::invalid_argument, "bad number '" + token + "' in " + context);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::uint64_t a = 0, b = 0;
    if (!read_pair(line, a, b)) {
      fail(line_no, have_header ? "expected an edge \"u v\"" : "expected a header \"n m\"");
    }
    if (!have_header) {
      if (a > std::uint64_t{1} << 31) fail(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) fail(line_no, "more edges than the " + std::to_string(m) + " declared");
    if (a >= n || b >= n) fail(line_no, "vertex id out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (a == b) fail(line_no, "self-loop on vertex " + std::to_string(a));
    Edge key{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(key).second) fail(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) fail(line_no, "missing header \"n m\"");
  if (edges.size() != m) {
    fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return make_graph(n, edges);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open graph file '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.order() << ' ' << graph.size() << '\n';
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

FamilyGraph parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::invalid_argument, "family '" + text + "' must look like name:params");
  }
  const std::string name = text.substr(0, colon);
  const auto params = split(text.substr(colon + 1), ',');
  auto count = [&](std::size_t expected) {
    if (params.size() != expected) {
      throw Error(ErrorCode::invalid_argument, "family '" + name + "' takes " + std::to_string(expected) +
                                                   " parameter(s), got '" + text + "'");
    }
  };
  auto number = [&](std::size_t i) { return parse_uint(params[i], "family '" + text + "'"); };

  FamilyGraph out{name, {}, std::nullopt};
  if (name == "path") {
    count(1);
    out.graph = path_graph(number(0));
  } else if (name == "cycle") {
    count(1);
    out.graph = cycle_graph(number(0));
  } else if (name == "complete") {
    count(1);
    out.graph = complete_graph(number(0));
  } else if (name == "star") {
    count(1);
    out.graph = star_graph(number(0));
  } else if (name == "empty") {
    count(1);
    out.graph = empty_graph(number(0));
  } else if (name == "tree") {
    count(2);
    out.graph = random_tree(number(0), number(1));
  } else if (name == "multipartite") {
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < params.size(); ++i) parts.push_back(number(i));
    MultipartiteSpec spec(std::move(parts));
    out.graph = complete_multipartite_graph(spec);
    out.multipartite = std::move(spec);
  } else if (name == "gnp") {
    count(3);
    const auto ratio = split(params[1], '/');
    if (ratio.size() != 2) throw Error(ErrorCode::invalid_argument, "gnp probability must be NUM/DEN");
    EdgeProbability p{parse_uint(ratio[0], "gnp probability"), parse_uint(ratio[1], "gnp probability")};
    out.graph = gnp_graph(number(0), p, number(2));
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown graph family '" + name + "'");
  }
  return out;
}

}  // namespace spreadlab
