#pragma once

// "ty-wha/1": structure constants of the TY algebra in matrix-unit basis.

#include <string>
#include <tuple>
#include <vector>

#include "tyw/ty_wha.hpp"

namespace tyw {

std::string export_wha_json(const TYAlgebra& B);

struct ImportedWha {
  int dim = 0;
  std::vector<std::string> basis;
  // (i, j, k, c): e_i e_j has coefficient c on e_k.
  std::vector<std::tuple<int, int, int, cplx>> product;

  Vec multiply(const Vec& a, const Vec& b) const;
};

// Throws ArgumentError on a wrong format tag or malformed entries.
ImportedWha import_wha_json(const std::string& text);

// max over basis pairs of |imported e_i e_j - B.multiply(e_i, e_j)|.
double product_roundtrip_residual(const TYAlgebra& B, const ImportedWha& w);

}  // namespace tyw
