#include "signed_spectra/catalog.hpp"

#include <vector>

#include <fmt/core.h>

#include "signed_spectra/error.hpp"

namespace signed_spectra {

namespace {

SignedGraph positive_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<SignedEdge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v, Sign::positive});
  return SignedGraph::from_edge_list(n, list);
}

std::vector<std::pair<int, int>> cycle_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return edges;
}

}  // namespace

SignedGraph catalog_underlying(CatalogGraph name, CatalogParams params) {
  switch (name) {
    case CatalogGraph::Q: {
      if (params.h < 0 || params.k < 0) throw Error(ErrorKind::BadParam, "Q(h,k) needs h, k >= 0");
      // Cycle 0-1-2-3-0; paths hang off the antipodal vertices 0 and 2.
      auto edges = cycle_edges(4);
      int next = 4;
      int tail = 0;
      for (int t = 0; t < params.h; ++t, ++next) {
        edges.emplace_back(tail, next);
        tail = next;
      }
      tail = 2;
      for (int t = 0; t < params.k; ++t, ++next) {
        edges.emplace_back(tail, next);
        tail = next;
      }
      return positive_graph(next, edges);
    }
    case CatalogGraph::Cycle:
      if (params.n < 4) throw Error(ErrorKind::BadParam, "Cycle(n) needs n >= 4");
      if (params.n % 2 != 0) {
        throw Error(ErrorKind::NotBipartite, fmt::format("C_{} is not bipartite", params.n));
      }
      return positive_graph(params.n, cycle_edges(params.n));
    case CatalogGraph::B6: {
      auto edges = cycle_edges(6);
      edges.emplace_back(1, 4);
      return positive_graph(6, edges);
    }
    case CatalogGraph::B7: {
      auto edges = cycle_edges(6);
      edges.emplace_back(1, 4);
      edges.emplace_back(6, 0);
      edges.emplace_back(6, 2);
      return positive_graph(7, edges);
    }
    case CatalogGraph::U1: {
      std::vector<std::pair<int, int>> edges;
      for (int v = 0; v < 8; ++v) {
        for (int bit = 1; bit < 8; bit <<= 1) {
          if ((v & bit) == 0) edges.emplace_back(v, v | bit);
        }
      }
      return positive_graph(8, edges);
    }
  }
  throw Error(ErrorKind::BadParam, "unknown catalog graph");
}

CatalogGraph parse_catalog_name(std::string_view name) {
  if (name == "Q") return CatalogGraph::Q;
  if (name == "Cycle") return CatalogGraph::Cycle;
  if (name == "B6") return CatalogGraph::B6;
  if (name == "B7") return CatalogGraph::B7;
  if (name == "U1") return CatalogGraph::U1;
  throw Error(ErrorKind::BadParam, fmt::format("unknown catalog graph '{}'", name));
}

std::string_view to_string(CatalogGraph name) {
  switch (name) {
    case CatalogGraph::Q: return "Q";
    case CatalogGraph::Cycle: return "Cycle";
    case CatalogGraph::B6: return "B6";
    case CatalogGraph::B7: return "B7";
    case CatalogGraph::U1: return "U1";
  }
  return "?";
}

}  // namespace signed_spectra
