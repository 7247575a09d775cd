#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "signed_spectra/eigen_solver.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

// Contents of a signed-graph v1 file:
//
//   signed-graph v1
//   n <count>
//   parts <r> <s>        (optional; vertices 1..r form X, the rest Y)
//   e <u> <v> <+|->      (one per edge, 1-based)
//
// Blank lines and lines starting with '#' are ignored.
struct GraphFile {
  SignedGraph graph;
  std::optional<std::pair<int, int>> parts;

  // Throws BadInput when no parts line was present.
  SignedBipartiteGraph bipartite() const;
};

// ParseError (with the 1-based line) on malformed text; the usual graph
// validation errors for bad vertices, loops or duplicates are rethrown as
// ParseError naming the edge line.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

std::string to_text(const SignedGraph& g, std::optional<std::pair<int, int>> parts = std::nullopt);
std::string to_text(const SignedBipartiteGraph& g);

// Solid edges are positive, dashed negative. Vertices are labelled v_i / w_j
// when parts are known and 1..n otherwise.
std::string to_dot(const GraphFile& file);

// Fixed notation with 12 decimals; negative zero prints as zero.
std::string format_real(double x);
// Rounds to 12 decimals (and clears negative zero) for JSON output.
double round12(double x);

std::string summary_to_json(const SpectralSummary& s);
std::string summary_to_csv(const SpectralSummary& s);
std::string summary_to_text(const SpectralSummary& s);

}  // namespace signed_spectra
