#pragma once

#include <string_view>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

// Underlying graphs of the minimum-spectral-radius unbalanced bipartite
// catalogue. Signing is left to the extremal module.
enum class CatalogGraph {
  Q,      // 4-cycle with pendant paths of h and k edges at antipodal vertices
  Cycle,  // C_n, n even
  B6,     // C_6 plus the chord w_2 w_5
  B7,     // B6 plus a vertex adjacent to w_1 and w_3
  U1,     // 3-cube
};

struct CatalogParams {
  int h = 0;
  int k = 0;
  int n = 0;
};

// Returns an all-positive graph. Errors: NotBipartite for odd cycles,
// BadParam for negative path lengths or n < 4.
SignedGraph catalog_underlying(CatalogGraph name, CatalogParams params = {});

CatalogGraph parse_catalog_name(std::string_view name);
std::string_view to_string(CatalogGraph name);

}  // namespace signed_spectra
