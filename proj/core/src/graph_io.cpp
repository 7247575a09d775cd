#include "signed_spectra/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <fmt/core.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

int parse_int(std::string_view word, int line, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, fmt::format("line {}: expected integer {}, got '{}'", line, what, word));
  }
  return value;
}

}  // namespace

SignedBipartiteGraph GraphFile::bipartite() const {
  if (!parts) throw Error(ErrorKind::BadInput, "graph file has no parts line");
  return SignedBipartiteGraph::from_signed_graph(graph, parts->first);
}

GraphFile parse_graph(std::string_view text) {
  enum class Stage { Header, Order, Body } stage = Stage::Header;
  GraphFile file;
  int n = 0;
  std::vector<SignedEdge> edges;
  std::vector<int> edge_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;

    switch (stage) {
      case Stage::Header:
        if (words.size() != 2 || words[0] != "signed-graph" || words[1] != "v1") {
          throw ParseError(line_no, fmt::format("line {}: expected header 'signed-graph v1'", line_no));
        }
        stage = Stage::Order;
        break;
      case Stage::Order:
        if (words.size() != 2 || words[0] != "n") {
          throw ParseError(line_no, fmt::format("line {}: expected 'n <count>'", line_no));
        }
        n = parse_int(words[1], line_no, "vertex count");
        if (n < 1) throw ParseError(line_no, fmt::format("line {}: vertex count must be positive", line_no));
        stage = Stage::Body;
        break;
      case Stage::Body:
        if (words[0] == "parts") {
          if (words.size() != 3 || file.parts || !edges.empty()) {
            throw ParseError(line_no, fmt::format("line {}: 'parts <r> <s>' must directly follow the n line",
                                                  line_no));
          }
          const int r = parse_int(words[1], line_no, "r");
          const int s = parse_int(words[2], line_no, "s");
          if (r < 1 || s < 1 || r + s != n) {
            throw ParseError(line_no, fmt::format("line {}: parts {} + {} do not add up to n = {}", line_no, r, s, n));
          }
          file.parts = std::make_pair(r, s);
        } else if (words[0] == "e") {
          if (words.size() != 4 || (words[3] != "+" && words[3] != "-")) {
            throw ParseError(line_no, fmt::format("line {}: expected 'e <u> <v> <+|->'", line_no));
          }
          const int u = parse_int(words[1], line_no, "vertex");
          const int v = parse_int(words[2], line_no, "vertex");
          edges.push_back({u - 1, v - 1, words[3] == "+" ? Sign::positive : Sign::negative});
          edge_lines.push_back(line_no);
        } else {
          throw ParseError(line_no, fmt::format("line {}: unknown record '{}'", line_no, words[0]));
        }
        break;
    }
  }
  if (stage != Stage::Body) throw ParseError(0, "truncated file: missing header or n line");

  // Diagnostics use the 1-based labels of the file.
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int line = edge_lines[i];
    const int u = edges[i].u + 1;
    const int v = edges[i].v + 1;
    for (const int x : {u, v}) {
      if (x < 1 || x > n) throw ParseError(line, fmt::format("line {}: vertex {} outside 1..{}", line, x, n));
    }
    if (u == v) throw ParseError(line, fmt::format("line {}: self-loop at vertex {}", line, u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError(line, fmt::format("line {}: duplicate edge {} {}", line, u, v));
    }
    if (file.parts && (u <= file.parts->first) == (v <= file.parts->first)) {
      throw ParseError(line, fmt::format("line {}: edge {} {} lies inside one part", line, u, v));
    }
  }
  file.graph = SignedGraph::from_edge_list(n, edges);
  if (file.parts) {
    try {
      (void)file.bipartite();
    } catch (const Error& e) {
      throw ParseError(0, e.what());
    }
  }
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, fmt::format("cannot open '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string to_text(const SignedGraph& g, std::optional<std::pair<int, int>> parts) {
  std::string out = fmt::format("signed-graph v1\nn {}\n", g.order());
  if (parts) out += fmt::format("parts {} {}\n", parts->first, parts->second);
  for (const auto& e : g.edges()) {
    out += fmt::format("e {} {} {}\n", e.u + 1, e.v + 1, e.sign == Sign::positive ? '+' : '-');
  }
  return out;
}

std::string to_text(const SignedBipartiteGraph& g) {
  return to_text(g.to_signed_graph(), std::make_pair(g.r(), g.s()));
}

std::string to_dot(const GraphFile& file) {
  const auto& g = file.graph;
  const auto label = [&](int v) {
    if (!file.parts) return fmt::format("{}", v + 1);
    return v < file.parts->first ? fmt::format("v{}", v + 1) : fmt::format("w{}", v + 1 - file.parts->first);
  };
  std::string out = "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out += fmt::format("  {};\n", label(v));
  for (const auto& e : g.edges()) {
    out += fmt::format("  {} -- {} [style={}];\n", label(e.u), label(e.v),
                       e.sign == Sign::positive ? "solid" : "dashed");
  }
  out += "}\n";
  return out;
}

std::string format_real(double x) {
  std::string s = fmt::format("{:.12f}", x);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

double round12(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

namespace {

std::vector<double> rounded(std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const double x : xs) out.push_back(round12(x));
  return out;
}

std::string joined(std::span<const double> xs, std::string_view sep) {
  std::vector<std::string> parts;
  parts.reserve(xs.size());
  for (const double x : xs) parts.push_back(format_real(x));
  return fmt::format("{}", fmt::join(parts, sep));
}

}  // namespace

std::string summary_to_json(const SpectralSummary& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["rho"] = round12(s.rho);
  j["index"] = round12(s.index);
  j["eigenvalues"] = rounded(s.eigenvalues);
  j["charpoly"] = rounded(s.charpoly.coefficients());
  return j.dump(2) + "\n";
}

std::string summary_to_csv(const SpectralSummary& s) {
  return fmt::format("n,rho,index,eigenvalues,charpoly\n{},{},{},{},{}\n", s.n, format_real(s.rho),
                     format_real(s.index), joined(s.eigenvalues, ";"), joined(s.charpoly.coefficients(), ";"));
}

std::string summary_to_text(const SpectralSummary& s) {
  return fmt::format("n = {}\nrho = {}\nindex = {}\neigenvalues = {}\ncharpoly = {}\n", s.n, format_real(s.rho),
                     format_real(s.index), joined(s.eigenvalues, " "), joined(s.charpoly.coefficients(), " "));
}

}  // namespace signed_spectra
