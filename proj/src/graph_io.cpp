#include "fvs/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace fvs {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(std::move(t));
  return tokens;
}

template <class T>
T parse_number(const std::string& token, std::size_t line, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string("invalid ") + what + " '" + token + "'");
  return value;
}

Vertex parse_vertex(const std::string& token, std::size_t line, int n) {
  const auto v = parse_number<long long>(token, line, "vertex id");
  if (v < 0 || v >= n) throw ParseError(line, "vertex id " + token + " out of range");
  return static_cast<Vertex>(v);
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  GraphFile file;
  std::optional<int> n;
  bool tournament = false;
  std::size_t header_line = 0;
  std::optional<std::vector<Weight>> weights;
  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> seen;
  auto key = [&](Vertex u, Vertex v) { return static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v); };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto text = line.substr(first + 1);
      if (!text.empty() && text.front() == ' ') text.erase(0, 1);
      file.comments.push_back(std::move(text));
      continue;
    }
    const auto tokens = tokenize(line);
    const std::string& kind = tokens.front();
    if (kind == "n") {
      if (n) throw ParseError(lineno, "duplicate 'n' line");
      if (tokens.size() < 2 || tokens.size() > 3) throw ParseError(lineno, "expected 'n <count> [tournament]'");
      const auto count = parse_number<long long>(tokens[1], lineno, "vertex count");
      if (count < 0 || count > 1'000'000) throw ParseError(lineno, "vertex count out of range");
      if (tokens.size() == 3) {
        if (tokens[2] != "tournament") throw ParseError(lineno, "unknown flag '" + tokens[2] + "'");
        tournament = true;
      }
      n = static_cast<int>(count);
      header_line = lineno;
      continue;
    }
    if (!n) throw ParseError(lineno, "expected 'n' line before '" + kind + "'");
    if (kind == "w") {
      if (weights) throw ParseError(lineno, "duplicate 'w' line");
      if (tokens.size() != static_cast<std::size_t>(*n) + 1)
        throw ParseError(lineno, "expected " + std::to_string(*n) + " weights, got " +
                                     std::to_string(tokens.size() - 1));
      weights.emplace();
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].front() == '-') throw ParseError(lineno, "negative weight '" + tokens[i] + "'");
        weights->push_back(parse_number<Weight>(tokens[i], lineno, "weight"));
      }
    } else if (kind == "a") {
      if (tokens.size() != 3) throw ParseError(lineno, "expected 'a <u> <v>'");
      const Vertex u = parse_vertex(tokens[1], lineno, *n);
      const Vertex v = parse_vertex(tokens[2], lineno, *n);
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + tokens[1]);
      if (seen.contains(key(u, v))) throw ParseError(lineno, "duplicate arc " + tokens[1] + " " + tokens[2]);
      if (tournament && seen.contains(key(v, u))) throw ParseError(lineno, "digon in a tournament");
      seen.insert(key(u, v));
      arcs.emplace_back(u, v);
    } else if (kind == "S") {
      if (file.terminals) throw ParseError(lineno, "duplicate 'S' line");
      VertexSet s;
      for (std::size_t i = 1; i < tokens.size(); ++i) s.push_back(parse_vertex(tokens[i], lineno, *n));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ParseError(lineno, "repeated terminal vertex");
      file.terminals = std::move(s);
    } else {
      throw ParseError(lineno, "unknown record type '" + kind + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing 'n' line");
  if (!weights) throw ParseError(lineno, "missing 'w' line");
  try {
    file.graph = WeightedDigraph(*n, arcs, std::move(*weights), tournament);
  } catch (const std::invalid_argument& e) {
    throw ParseError(header_line, e.what());
  }
  return file;
}

GraphFile parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const GraphFile& file) {
  const auto& g = file.graph;
  for (const auto& c : file.comments) out << "# " << c << '\n';
  out << "n " << g.size() << (g.flagged_tournament() ? " tournament" : "") << '\n';
  out << 'w';
  for (Weight w : g.weights()) out << ' ' << w;
  out << '\n';
  for (const auto& [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
  if (file.terminals) {
    out << 'S';
    for (Vertex v : *file.terminals) out << ' ' << v;
    out << '\n';
  }
}

std::string format_graph(const GraphFile& file) {
  std::ostringstream out;
  write_graph(out, file);
  return out.str();
}

void write_graph_file(const std::string& path, const GraphFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, file);
}

}  // namespace fvs
