#include "tyw/wha_export.hpp"

#include <map>

#include <json.hpp>

#include "tyw/error.hpp"

namespace tyw {

using nlohmann::json;

namespace {
json entry(std::initializer_list<long long> idx, cplx c) {
  json e = json::array();
  for (long long i : idx) e.push_back(i);
  e.push_back(c.real());
  e.push_back(c.imag());
  return e;
}
}  // namespace

std::string export_wha_json(const TYAlgebra& B) {
  const int D = B.dim();
  json j;
  j["format"] = "ty-wha/1";
  j["group"] = {{"factors", B.group().factors()}};
  j["bicharacter"] = json::parse(B.data().chi.to_json());
  j["tau_sign"] = B.data().tau_sign;
  j["dim"] = D;
  json basis = json::array();
  for (int i = 0; i < D; ++i) basis.push_back(B.unit_label(i));
  j["basis"] = basis;

  json prod = json::array(), cop = json::array(), cou = json::array(), ant = json::array(), st = json::array();
  std::vector<std::pair<int, cplx>> buf;
  for (int i = 0; i < D; ++i) {
    for (int k = 0; k < D; ++k) {
      B.multiply_units(i, k, buf);
      std::map<int, cplx> acc;
      for (const auto& [l, c] : buf) acc[l] += c;
      for (const auto& [l, c] : acc) {
        if (!B.tolerance().is_zero(c)) prod.push_back(entry({i, k, l}, c));
      }
    }
    const Vec e = B.basis(i);
    for (const auto& [t, c] : B.coproduct(e).data()) {
      const auto [p, q] = B.tsplit(t);
      cop.push_back(entry({i, p, q}, c));
    }
    const cplx eps = B.counit(e);
    if (eps != cplx{}) cou.push_back(entry({i}, eps));
    for (const auto& [l, c] : B.antipode(e).data()) ant.push_back(entry({i, l}, c));
    for (const auto& [l, c] : B.star(e).data()) st.push_back(entry({i, l}, c));
  }
  j["product"] = prod;
  j["coproduct"] = cop;
  j["counit"] = cou;
  j["antipode"] = ant;
  j["star"] = st;
  return j.dump(1) + "\n";
}

ImportedWha import_wha_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("export file is not JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "ty-wha/1") throw ArgumentError("not a ty-wha/1 document");
  ImportedWha w;
  try {
    w.dim = j.at("dim").get<int>();
    w.basis = j.at("basis").get<std::vector<std::string>>();
    for (const auto& e : j.at("product")) {
      const int i = e.at(0).get<int>(), k = e.at(1).get<int>(), l = e.at(2).get<int>();
      if (i < 0 || k < 0 || l < 0 || i >= w.dim || k >= w.dim || l >= w.dim) throw ArgumentError("product index out of range");
      w.product.emplace_back(i, k, l, cplx(e.at(3).get<double>(), e.at(4).get<double>()));
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed ty-wha/1 document: ") + e.what());
  }
  if (static_cast<int>(w.basis.size()) != w.dim) throw ArgumentError("basis length does not match dim");
  return w;
}

Vec ImportedWha::multiply(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, k, l, c] : product) {
    const cplx ca = a[i];
    if (ca == cplx{}) continue;
    const cplx cb = b[k];
    if (cb == cplx{}) continue;
    out.add(l, ca * cb * c);
  }
  return out;
}

double product_roundtrip_residual(const TYAlgebra& B, const ImportedWha& w) {
  if (w.dim != B.dim()) return 1.0e300;
  std::map<std::pair<int, int>, Vec> table;
  for (const auto& [i, k, l, c] : w.product) table[{i, k}].add(l, c);
  double worst = 0.0;
  const Vec none;
  for (int i = 0; i < B.dim(); ++i) {
    for (int k = 0; k < B.dim(); ++k) {
      const auto it = table.find({i, k});
      worst = std::max(worst, max_abs_diff(it == table.end() ? none : it->second, B.multiply(B.basis(i), B.basis(k))));
    }
  }
  return worst;
}

}  // namespace tyw
