#include "tyw/classify.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tyw/coideals.hpp"
#include "tyw/error.hpp"

namespace tyw {

OrbitAction::OrbitAction(const Bicharacter& chi, const Subgroup& K, PayloadKind kind, bool allow_flip, bool first_only)
    : kind_(kind),
      q0_(chi.group(), K),
      q1_(chi.group(), orthogonal(chi, K)),
      flip_(allow_flip && !first_only && K == q1_.subgroup()),
      first_only_(first_only) {}

std::vector<int> OrbitAction::shift(const QuotientGroup& q, int by, const std::vector<int>& v) const {
  if (kind_ == PayloadKind::Subsets) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int c : v) out.push_back(q.add(by, c));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (v.empty()) return v;
  std::vector<int> out(v.size());
  for (int l = 0; l < q.size(); ++l) out[q.add(by, l)] = v[l];
  return out;
}

OrbitKey OrbitAction::apply(std::size_t h, const OrbitKey& s) const {
  if (first_only_) return {shift(q0_, static_cast<int>(h), s.first), s.second};
  const std::size_t ab = static_cast<std::size_t>(q0_.size()) * q1_.size();
  const bool f = h >= ab;
  h %= ab;
  const int s0 = static_cast<int>(h / q1_.size());
  const int t = static_cast<int>(h % q1_.size());
  const auto& first = f ? s.second : s.first;
  const auto& second = f ? s.first : s.second;
  return {shift(q0_, s0, first), shift(q1_, t, second)};
}

OrbitKey OrbitAction::canonical(const OrbitKey& s) const {
  OrbitKey best = s;
  for (std::size_t h = 0; h < size(); ++h) best = std::min(best, apply(h, s));
  return best;
}

std::vector<OrbitKey> OrbitAction::orbit(const OrbitKey& s) const {
  std::set<OrbitKey> o;
  for (std::size_t h = 0; h < size(); ++h) o.insert(apply(h, s));
  return {o.begin(), o.end()};
}

std::size_t burnside_count(std::size_t group_size, const std::vector<OrbitKey>& states,
                           const std::function<OrbitKey(std::size_t, const OrbitKey&)>& act) {
  if (group_size == 0) throw ArgumentError("empty acting group");
  std::size_t fixed = 0;
  for (std::size_t h = 0; h < group_size; ++h) {
    for (const auto& s : states) fixed += act(h, s) == s ? 1 : 0;
  }
  if (fixed % group_size != 0) throw StructuralError("Burnside sum not divisible by the group order");
  return fixed / group_size;
}

std::size_t ClassificationReport::total() const {
  std::size_t n = 0;
  for (const auto& k : per_k) n += k.orbits.size();
  return n;
}

std::size_t ClassificationReport::coideal_total() const {
  std::size_t n = 0;
  for (const auto& k : per_k) {
    for (const auto& o : k.orbits) n += o.coideal_flag ? 1 : 0;
  }
  return n;
}

bool ClassificationReport::burnside_ok() const {
  return std::all_of(per_k.begin(), per_k.end(), [](const auto& k) { return k.burnside_ok; });
}

bool ClassificationReport::all_realized_verified() const {
  for (const auto& k : per_k) {
    for (const auto& o : k.orbits) {
      if (!o.realized || !o.verified) return false;
    }
  }
  return true;
}

bool admissible_pair(const OrbitKey& s) {
  if (s.first.empty() && s.second.empty()) return false;
  if (s.first.empty() || s.second.empty()) return true;
  return std::min(s.first.size(), s.second.size()) <= 1;
}

bool coideal_flag(const OrbitKey& s, int a, int b) {
  const auto n0 = s.first.size(), n1 = s.second.size();
  if (n1 == 0) return n0 == 1;
  if (n0 == 0) return n1 == 1;
  return (n0 == static_cast<std::size_t>(a) && n1 == 1) || (n1 == static_cast<std::size_t>(b) && n0 == 1);
}

namespace {

void check_order(const FiniteAbelianGroup& G, const ClassifyOptions& opts) {
  if (G.order() > opts.max_order) {
    throw SizeError("|G| = " + std::to_string(G.order()) + " exceeds the classification guard " +
                    std::to_string(opts.max_order));
  }
}

std::vector<int> mask_to_list(std::uint32_t m) {
  std::vector<int> v;
  for (int i = 0; m; ++i, m >>= 1) {
    if (m & 1u) v.push_back(i);
  }
  return v;
}

// Orbits of an invariant state list, sorted by canonical form.
KClassification orbits_of(const FiniteAbelianGroup& G, const OrbitAction& act, const std::vector<OrbitKey>& states,
                          const Subgroup& K, OrbitType type, PayloadKind kind) {
  KClassification kc{K, act.q1().subgroup(), type, act.name(), act.size(), states.size(), {}, 0, false};
  std::set<OrbitKey> seen;
  for (const auto& s : states) {
    if (seen.count(s)) continue;
    const auto orb = act.orbit(s);
    seen.insert(orb.begin(), orb.end());
    kc.orbits.push_back(OrbitRep{K, type, kind, orb.front(), orb.size()});
  }
  std::sort(kc.orbits.begin(), kc.orbits.end(), [](const auto& x, const auto& y) { return x.canonical < y.canonical; });
  kc.burnside = burnside_count(act.size(), states, [&](std::size_t h, const OrbitKey& s) { return act.apply(h, s); });
  kc.burnside_ok = kc.burnside == kc.orbits.size();
  if (!kc.burnside_ok) {
    throw StructuralError("orbit count " + std::to_string(kc.orbits.size()) + " differs from Burnside count " +
                          std::to_string(kc.burnside) + " for K = " + K.format(G));
  }
  return kc;
}

// All vectors in {0..M}^len, in lexicographic order.
std::vector<std::vector<int>> all_vectors(int len, int M) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(len, 0);
  while (true) {
    out.push_back(v);
    int i = len - 1;
    while (i >= 0 && v[i] == M) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

double count_power(int base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

ClassificationReport weak_coideal_classes(const Bicharacter& chi, const ClassifyOptions& opts) {
  const auto& G = chi.group();
  check_order(G, opts);
  ClassificationReport rep;
  rep.theorem = "weak-coideals";
  rep.factors = G.factors();
  for (const auto& K : enumerate_subgroups(G, opts.max_order)) {
    const OrbitAction act(chi, K, PayloadKind::Subsets, !opts.drop_flip);
    const int a = act.q0().size(), b = act.q1().size();
    std::vector<OrbitKey> states;
    for (std::uint32_t m0 = 0; m0 < (1u << a); ++m0) {
      for (std::uint32_t m1 = 0; m1 < (1u << b); ++m1) {
        const int p0 = std::popcount(m0), p1 = std::popcount(m1);
        if (p0 == 0 && p1 == 0) continue;
        if (p0 > 1 && p1 > 1) continue;
        states.push_back({mask_to_list(m0), mask_to_list(m1)});
      }
    }
    if (states.size() > opts.max_states) throw SizeError("too many subset pairs for K = " + K.format(G));
    auto kc = orbits_of(G, act, states, K, OrbitType::TypeD, PayloadKind::Subsets);
    std::set<OrbitKey> flagged;
    for (auto& o : kc.orbits) {
      o.coideal_flag = coideal_flag(o.canonical, a, b);
      if (o.coideal_flag) flagged.insert(o.canonical);
    }
    const auto listed = coideal_orbits(chi, K, opts);
    if (std::set<OrbitKey>(listed.begin(), listed.end()) != flagged) {
      throw StructuralError("coideal orbits for K = " + K.format(G) + " disagree with the flagged enumeration");
    }
    rep.per_k.push_back(std::move(kc));
  }
  return rep;
}

std::vector<OrbitKey> coideal_orbits(const Bicharacter& chi, const Subgroup& K, const ClassifyOptions& opts) {
  const OrbitAction act(chi, K, PayloadKind::Subsets, !opts.drop_flip);
  const int a = act.q0().size(), b = act.q1().size();
  std::vector<int> all0, all1;
  for (int i = 0; i < a; ++i) all0.push_back(i);
  for (int i = 0; i < b; ++i) all1.push_back(i);
  std::set<OrbitKey> out;
  for (int l = 0; l < a; ++l) {
    out.insert(act.canonical({{l}, {}}));
    out.insert(act.canonical({{l}, all1}));
  }
  for (int m = 0; m < b; ++m) {
    out.insert(act.canonical({{}, {m}}));
    out.insert(act.canonical({all0, {m}}));
  }
  const bool self_dual = K == act.q1().subgroup();
  const std::size_t expect = self_dual ? 2 : 4;
  if (out.size() != expect) {
    throw StructuralError(std::to_string(out.size()) + " coideal orbits for K = " + K.format(chi.group()) +
                          ", expected " + std::to_string(expect));
  }
  return {out.begin(), out.end()};
}

ClassificationReport g_algebra_classes(const Bicharacter& chi, int max_mult, const ClassifyOptions& opts) {
  if (max_mult < 1) throw ArgumentError("max_mult must be at least 1");
  const auto& G = chi.group();
  check_order(G, opts);
  ClassificationReport rep;
  rep.theorem = "g-algebras";
  rep.factors = G.factors();
  rep.max_mult = max_mult;
  for (const auto& K : enumerate_subgroups(G, opts.max_order)) {
    const OrbitAction act(chi, K, PayloadKind::Multiplicities, !opts.drop_flip);
    const int a = act.q0().size(), b = act.q1().size();
    if (count_power(max_mult + 1, a + b) > static_cast<double>(opts.max_states)) {
      throw SizeError("too many multiplicity collections for K = " + K.format(G) + "; lower --max-mult");
    }
    const auto v0 = all_vectors(a, max_mult), v1 = all_vectors(b, max_mult);
    std::vector<OrbitKey> states;
    for (const auto& x : v0) {
      for (const auto& y : v1) {
        if (all_zero(x) && all_zero(y)) continue;
        states.push_back({x, y});
      }
    }
    rep.per_k.push_back(orbits_of(G, act, states, K, OrbitType::TypeD, PayloadKind::Multiplicities));

    if (K == act.q1().subgroup()) {
      const OrbitAction single(chi, K, PayloadKind::Multiplicities, false, true);
      std::vector<OrbitKey> st;
      for (const auto& x : v0) {
        if (!all_zero(x)) st.push_back({x, {}});
      }
      auto kc = orbits_of(G, single, st, K, OrbitType::TypeI, PayloadKind::Multiplicities);
      rep.per_k.push_back(std::move(kc));
    }
  }
  return rep;
}

RealizeReport realize_and_verify(const TYAlgebra& B, const OrbitRep& rep) {
  const auto& G = B.group();
  const auto& chi = B.data().chi;
  if (rep.kind != PayloadKind::Subsets || rep.type != OrbitType::TypeD) {
    throw ArgumentError("only subset-pair orbit reps are realizable");
  }
  const auto& [Z0, Z1] = rep.canonical;
  const Subgroup Kp = orthogonal(chi, rep.K);
  const QuotientGroup q0(G, rep.K), q1(G, Kp);
  const std::string name = format_key(G, rep, q0, q1);

  std::vector<WeakCoideal> built;
  built.push_back(build_from_pair(B, rep.K, Z0, Z1));
  if (Z1.empty() && Z0.size() == 1) built.push_back(build_I_Omega_K(B, rep.K));
  if (Z0.empty() && Z1.size() == 1) built.push_back(build_I_Omega_K(B, Kp));

  const auto expect = spectral_dims(chi, CoidealSpec{rep.K, Z0, Z1});
  RealizeReport out;
  out.verified = out.indecomposable = out.dims_match = true;
  std::ostringstream detail;
  for (const auto& w : built) {
    out.builders.push_back(w.builder);
    const auto r = verify_weak_coideal(B, w);
    if (!r.passed()) {
      out.verified = false;
      for (const auto& c : r.conditions) {
        if (!c.passed) detail << w.builder << ": " << c.name << " fails (" << c.witness << "); ";
      }
    }
    if (!is_indecomposable(B, w)) {
      out.indecomposable = false;
      detail << w.builder << ": decomposable; ";
    }
    if (w.dims() != expect) {
      out.dims_match = false;
      detail << w.builder << ": dims differ from the multiplicity formula; ";
    }
  }
  // A singleton one-sided rep is realized twice; the first copy never has
  // the global unit, the second one does.
  out.is_coideal = is_coideal(B, built.back());
  out.flag_agrees = out.is_coideal == rep.coideal_flag;
  if (built.size() == 2 && is_coideal(B, built.front())) {
    out.flag_agrees = false;
    detail << built.front().builder << ": unexpectedly unital; ";
  }
  if (!out.flag_agrees) detail << "coideal flag disagrees; ";
  out.detail = detail.str();
  if (!out.ok()) throw StructuralError("rep " + name + ": " + out.detail);
  return out;
}

void realize_all(const TYAlgebra& B, ClassificationReport& report) {
  if (report.theorem != "weak-coideals") throw ArgumentError("realization applies to weak-coideal classes");
  for (auto& kc : report.per_k) {
    for (auto& o : kc.orbits) {
      o.realized = true;
      try {
        realize_and_verify(B, o);
        o.verified = true;
      } catch (const StructuralError&) {
        o.verified = false;
      }
    }
  }
}

namespace {
std::vector<std::string> coset_labels(const FiniteAbelianGroup& G, const QuotientGroup& q, const std::vector<int>& cs) {
  std::vector<std::string> out;
  for (int c : cs) out.push_back(G.format(q.representative(c)));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

const char* type_name(OrbitType t) { return t == OrbitType::TypeI ? "I" : "D"; }
}  // namespace

std::string format_key(const FiniteAbelianGroup& G, const OrbitRep& rep, const QuotientGroup& q0,
                       const QuotientGroup& q1) {
  if (rep.kind == PayloadKind::Subsets) {
    return "(" + join(coset_labels(G, q0, rep.canonical.first)) + ", " + join(coset_labels(G, q1, rep.canonical.second)) + ")";
  }
  if (rep.type == OrbitType::TypeI) return join_ints(rep.canonical.first);
  return "(" + join_ints(rep.canonical.first) + ", " + join_ints(rep.canonical.second) + ")";
}

std::string to_json(const Bicharacter& chi, const ClassificationReport& r) {
  using nlohmann::ordered_json;
  const auto& G = chi.group();
  ordered_json j;
  j["format"] = "ty-classify/1";
  j["theorem"] = r.theorem;
  j["group"] = {{"factors", r.factors}};
  j["bicharacter"] = ordered_json::parse(chi.to_json());
  if (r.theorem == "g-algebras") j["max_mult"] = r.max_mult;
  j["total"] = r.total();
  if (r.theorem == "weak-coideals") j["coideal_total"] = r.coideal_total();
  j["burnside_ok"] = r.burnside_ok();
  ordered_json per = ordered_json::array();
  for (const auto& kc : r.per_k) {
    const QuotientGroup q0(G, kc.K), q1(G, kc.K_perp);
    ordered_json k;
    k["K"] = kc.K.format(G);
    k["K_perp"] = kc.K_perp.format(G);
    k["self_dual"] = kc.K == kc.K_perp;
    k["type"] = type_name(kc.type);
    k["action"] = kc.action;
    k["action_order"] = kc.action_order;
    k["states"] = kc.states;
    std::vector<std::string> c0, c1;
    for (int c = 0; c < q0.size(); ++c) c0.push_back(G.format(q0.representative(c)));
    for (int c = 0; c < q1.size(); ++c) c1.push_back(G.format(q1.representative(c)));
    k["cosets_K"] = c0;
    k["cosets_K_perp"] = c1;
    ordered_json orbits = ordered_json::array();
    for (const auto& o : kc.orbits) {
      ordered_json e;
      if (o.kind == PayloadKind::Subsets) {
        e["rep"] = {{"Z0", coset_labels(G, q0, o.canonical.first)}, {"Z1", coset_labels(G, q1, o.canonical.second)}};
      } else if (o.type == OrbitType::TypeI) {
        e["rep"] = {{"m", o.canonical.first}};
      } else {
        e["rep"] = {{"m0", o.canonical.first}, {"m1", o.canonical.second}};
      }
      e["size"] = o.size;
      if (o.kind == PayloadKind::Subsets) {
        e["coideal_flag"] = o.coideal_flag;
        e["realized"] = o.realized;
        e["verified"] = o.verified;
      }
      orbits.push_back(e);
    }
    k["orbits"] = orbits;
    k["burnside"] = kc.burnside;
    k["burnside_ok"] = kc.burnside_ok;
    per.push_back(k);
  }
  j["per_subgroup"] = per;
  return j.dump(2) + "\n";
}

std::string format_text(const Bicharacter& chi, const ClassificationReport& r) {
  const auto& G = chi.group();
  std::ostringstream os;
  for (const auto& kc : r.per_k) {
    const QuotientGroup q0(G, kc.K), q1(G, kc.K_perp);
    os << "K = " << kc.K.format(G) << "  K^perp = " << kc.K_perp.format(G) << "  type " << type_name(kc.type) << "  "
       << kc.action << " (order " << kc.action_order << ")  states " << kc.states << "  orbits " << kc.orbits.size()
       << "  burnside " << kc.burnside << (kc.burnside_ok ? " ok" : " MISMATCH") << "\n";
    for (const auto& o : kc.orbits) {
      os << "  " << format_key(G, o, q0, q1) << "  size " << o.size;
      if (o.kind == PayloadKind::Subsets) {
        os << (o.coideal_flag ? "  coideal" : "");
        if (o.realized) os << (o.verified ? "  verified" : "  FAILED");
      }
      os << "\n";
    }
  }
  os << "total " << r.total();
  if (r.theorem == "weak-coideals") os << "  coideal-containing " << r.coideal_total();
  os << "\n";
  return os.str();
}

}  // namespace tyw
