#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tyw/ty_wha.hpp"

namespace tyw::test {

inline nlohmann::json load_json(const std::string& name) {
  std::ifstream in(std::string(TYW_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  return nlohmann::json::parse(in);
}

inline TYAlgebra make(const std::string& factors, int tau_sign = 1, Faults f = {}) {
  auto G = FiniteAbelianGroup::parse(factors);
  auto chi = Bicharacter::standard(G);
  return TYAlgebra(TYData(G, chi, tau_sign), {}, f);
}

inline TYAlgebra make_hyperbolic22(int tau_sign = 1) {
  FiniteAbelianGroup G({2, 2});
  Bicharacter chi(G, {{Phase(0, 1), Phase(1, 2)}, {Phase(1, 2), Phase(0, 1)}});
  return TYAlgebra(TYData(G, chi, tau_sign));
}

// Columns of a sparse matrix given as [i, k, re, im]: image of e_i has
// coefficient re+i*im on e_k.
inline std::vector<Vec> columns(const nlohmann::json& entries, int dim) {
  std::vector<Vec> out(static_cast<std::size_t>(dim));
  for (const auto& e : entries) out[e[0].get<int>()].add(e[1].get<int>(), {e[2].get<double>(), e[3].get<double>()});
  return out;
}

inline Vec conj(Vec v) {
  Vec out;
  for (const auto& [i, c] : v.data()) out.add(i, std::conj(c));
  return out;
}

}  // namespace tyw::test
