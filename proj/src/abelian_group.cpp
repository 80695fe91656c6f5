#include "tyw/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "json.hpp"
#include "tyw/error.hpp"

namespace tyw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ArgumentError("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

// ---- Phase

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("phase with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Phase(parse_int(text, "phase"), 1);
  return Phase(parse_int(text.substr(0, slash), "phase"), parse_int(text.substr(slash + 1), "phase"));
}

Phase Phase::operator+(const Phase& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return Phase(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

Phase Phase::operator-() const { return Phase(-num_, den_); }

Phase Phase::times(std::int64_t k) const { return Phase((k % den_) * num_, den_); }

std::complex<double> Phase::value() const {
  // Quarter turns exactly, so standard characters of 2- and 4-groups are exact.
  if ((4 * num_) % den_ == 0) {
    switch ((4 * num_) / den_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double t = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(t), std::sin(t)};
}

std::string Phase::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---- FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) factors_.push_back(1);
  std::int64_t order = 1;
  for (int n : factors_) {
    if (n < 1) throw ArgumentError("cyclic factor must be >= 1, got " + std::to_string(n));
    order *= n;
    if (order > (1 << 14)) throw SizeError("group order too large");
  }
  order_ = static_cast<int>(order);

  coords_.resize(order_);
  for (int idx = 0; idx < order_; ++idx) {
    std::vector<int> c(factors_.size());
    int r = idx;
    for (int i = rank() - 1; i >= 0; --i) {
      c[i] = r % factors_[i];
      r /= factors_[i];
    }
    coords_[idx] = std::move(c);
  }
  add_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(order_);
  for (int a = 0; a < order_; ++a) {
    GroupElement n{coords_[a]};
    for (int i = 0; i < rank(); ++i) n.coords[i] = (factors_[i] - n.coords[i]) % factors_[i];
    neg_[a] = index(n);
    for (int b = 0; b < order_; ++b) {
      GroupElement s{coords_[a]};
      for (int i = 0; i < rank(); ++i) s.coords[i] = (s.coords[i] + coords_[b][i]) % factors_[i];
      add_[static_cast<std::size_t>(a) * order_ + b] = index(s);
    }
  }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw ArgumentError("empty group specification");
  std::vector<int> f;
  for (auto part : split(spec, ',')) {
    const auto v = parse_int(part, "cyclic factor");
    if (v < 1 || v > (1 << 14)) throw ArgumentError("cyclic factor out of range: " + std::string(trim(part)));
    f.push_back(static_cast<int>(v));
  }
  return FiniteAbelianGroup(std::move(f));
}

GroupElement FiniteAbelianGroup::element(int index) const {
  if (index < 0 || index >= order_) throw ArgumentError("group element index out of range");
  return GroupElement{coords_[index]};
}

int FiniteAbelianGroup::index(const GroupElement& e) const {
  if (e.coords.size() != factors_.size()) throw ArgumentError("group element has wrong rank");
  int idx = 0;
  for (int i = 0; i < rank(); ++i) {
    const int c = e.coords[i];
    if (c < 0 || c >= factors_[i]) throw ArgumentError("group element coordinate not reduced");
    idx = idx * factors_[i] + c;
  }
  return idx;
}

std::string FiniteAbelianGroup::format(int index) const {
  const auto& c = coords_[index];
  if (rank() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

int FiniteAbelianGroup::parse_element(std::string_view text) const {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != rank()) {
    throw ArgumentError("element '" + std::string(text) + "' needs " + std::to_string(rank()) + " coordinate(s)");
  }
  GroupElement e;
  for (int i = 0; i < rank(); ++i) {
    const auto v = parse_int(parts[i], "group element coordinate");
    e.coords.push_back(static_cast<int>(((v % factors_[i]) + factors_[i]) % factors_[i]));
  }
  return index(e);
}

// ---- Subgroup

Subgroup::Subgroup(const FiniteAbelianGroup& group, std::vector<int> elements)
    : member_(group.order(), 0) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int g : elements) {
    if (g < 0 || g >= group.order()) throw InvariantError("subgroup element out of range");
    member_[g] = 1;
  }
  if (elements.empty() || elements.front() != 0) throw InvariantError("subset does not contain the identity");
  for (int a : elements) {
    if (!member_[group.neg(a)]) throw InvariantError("subset not closed under negation");
    for (int b : elements) {
      if (!member_[group.add(a, b)]) throw InvariantError("subset not closed under addition");
    }
  }
  elements_ = std::move(elements);
}

Subgroup Subgroup::generated_by(const FiniteAbelianGroup& group, const std::vector<int>& gens) {
  std::vector<char> in(group.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (int g : gens) {
    if (g < 0 || g >= group.order()) throw ArgumentError("generator out of range");
  }
  // Multiply out by each generator's cyclic orbit until stable.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int g : gens) {
      const int s = group.add(elems[i], g);
      if (!in[s]) {
        in[s] = 1;
        elems.push_back(s);
      }
    }
  }
  return Subgroup(group, std::move(elems));
}

Subgroup Subgroup::trivial(const FiniteAbelianGroup& group) { return Subgroup(group, {0}); }

Subgroup Subgroup::whole(const FiniteAbelianGroup& group) {
  std::vector<int> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(group, std::move(all));
}

std::string Subgroup::format(const FiniteAbelianGroup& group) const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ",";
    s += group.format(elements_[i]);
  }
  return s + "}";
}

// ---- QuotientGroup

QuotientGroup::QuotientGroup(const FiniteAbelianGroup& group, Subgroup k)
    : k_(std::move(k)), coset_of_(group.order(), -1) {
  if (k_.parent_order() != group.order()) throw InvariantError("subgroup belongs to a different group");
  for (int g = 0; g < group.order(); ++g) {
    if (coset_of_[g] >= 0) continue;
    const int c = static_cast<int>(reps_.size());
    reps_.push_back(g);
    std::vector<int> mem;
    for (int x : k_.elements()) {
      const int s = group.add(g, x);
      coset_of_[s] = c;
      mem.push_back(s);
    }
    std::sort(mem.begin(), mem.end());
    members_.push_back(std::move(mem));
  }
  const int nc = size();
  translate_.resize(static_cast<std::size_t>(group.order()) * nc);
  for (int g = 0; g < group.order(); ++g) {
    for (int c = 0; c < nc; ++c) {
      translate_[static_cast<std::size_t>(g) * nc + c] = coset_of_[group.add(g, reps_[c])];
    }
  }
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group, int bound) {
  if (group.order() > bound) {
    throw SizeError("group order " + std::to_string(group.order()) + " exceeds subgroup enumeration bound " +
                    std::to_string(bound));
  }
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  out.push_back(Subgroup::trivial(group));
  seen.insert(out.back().elements());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::vector<int> base = out[i].elements();
    for (int g = 0; g < group.order(); ++g) {
      if (out[i].contains(g)) continue;
      std::vector<int> gens = base;
      gens.push_back(g);
      Subgroup s = Subgroup::generated_by(group, gens);
      if (seen.insert(s.elements()).second) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Bicharacter

Bicharacter::Bicharacter(const FiniteAbelianGroup& group, std::vector<std::vector<Phase>> matrix)
    : group_(group), matrix_(std::move(matrix)) {
  const int r = group_.rank();
  if (static_cast<int>(matrix_.size()) != r) throw ArgumentError("bicharacter matrix must be rank x rank");
  for (const auto& row : matrix_) {
    if (static_cast<int>(row.size()) != r) throw ArgumentError("bicharacter matrix must be rank x rank");
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (matrix_[i][j] != matrix_[j][i]) throw InvariantError("bicharacter matrix not symmetric");
      if (!matrix_[i][j].times(group_.factors()[i]).is_zero()) {
        throw InvariantError("bicharacter not well defined: n_i * M_ij not integral");
      }
    }
  }
  const int n = group_.order();
  table_.resize(static_cast<std::size_t>(n) * n);
  values_.resize(table_.size());
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      Phase t;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          t = t + matrix_[i][j].times(static_cast<std::int64_t>(group_.coord(g, i)) * group_.coord(h, j));
        }
      }
      table_[static_cast<std::size_t>(g) * n + h] = t;
      values_[static_cast<std::size_t>(g) * n + h] = t.value();
    }
  }
}

Bicharacter Bicharacter::standard(const FiniteAbelianGroup& group) {
  const int r = group.rank();
  std::vector<std::vector<Phase>> m(r, std::vector<Phase>(r));
  for (int i = 0; i < r; ++i) m[i][i] = Phase(1, group.factors()[i]);
  return Bicharacter(group, std::move(m));
}

Bicharacter Bicharacter::from_json(const FiniteAbelianGroup& group, std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("bicharacter JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
    throw ArgumentError("bicharacter JSON needs a \"matrix\" array");
  }
  std::vector<std::vector<Phase>> m;
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw ArgumentError("bicharacter matrix rows must be arrays");
    std::vector<Phase> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        r.push_back(Phase::parse(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        r.push_back(Phase(e.get<std::int64_t>(), 1));
      } else {
        throw ArgumentError("bicharacter entries must be \"p/q\" strings or integers");
      }
    }
    m.push_back(std::move(r));
  }
  return Bicharacter(group, std::move(m));
}

std::vector<int> Bicharacter::radical() const {
  std::vector<int> rad;
  const int n = group_.order();
  for (int g = 0; g < n; ++g) {
    bool trivial = true;
    for (int h = 0; h < n && trivial; ++h) trivial = eval(g, h).is_zero();
    if (trivial) rad.push_back(g);
  }
  return rad;
}

std::string Bicharacter::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : matrix_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& p : row) r.push_back(p.str());
    rows.push_back(r);
  }
  return nlohmann::json{{"matrix", rows}}.dump();
}

// ---- characters of K

CharacterOfK::CharacterOfK(const FiniteAbelianGroup& group, const Subgroup& k, std::map<int, Phase> phases)
    : phases_(std::move(phases)) {
  if (static_cast<int>(phases_.size()) != k.size()) throw InvariantError("character must be given on all of K");
  for (const auto& [x, _] : phases_) {
    if (!k.contains(x)) throw InvariantError("character given outside K");
  }
  for (int a : k.elements()) {
    for (int b : k.elements()) {
      if (phases_.at(group.add(a, b)) != phases_.at(a) + phases_.at(b)) {
        throw InvariantError("character of K not additive");
      }
    }
  }
}

CharacterOfK CharacterOfK::trivial(const FiniteAbelianGroup& group, const Subgroup& k) {
  std::map<int, Phase> p;
  for (int x : k.elements()) p[x] = Phase();
  return CharacterOfK(group, k, std::move(p));
}

bool CharacterOfK::is_trivial() const {
  return std::all_of(phases_.begin(), phases_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

Subgroup orthogonal(const Bicharacter& chi, const Subgroup& k) {
  const auto& G = chi.group();
  if (!chi.is_nondegenerate()) throw InvariantError("bicharacter degenerate");
  std::vector<int> perp;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : k.elements()) {
      if (!chi.eval(x, g).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) perp.push_back(g);
  }
  Subgroup out(G, std::move(perp));
  if (out.size() * k.size() != G.order()) throw InvariantError("|K||K^perp| != |G|");
  return out;
}

std::vector<int> orthogonal_rho(const Bicharacter& chi, const Subgroup& k, const CharacterOfK& rho) {
  const auto& G = chi.group();
  if (!chi.is_nondegenerate()) throw InvariantError("bicharacter degenerate");
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : k.elements()) {
      if (chi.eval(g, x) != rho(G.neg(x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return out;
}

}  // namespace tyw
