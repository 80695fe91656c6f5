#pragma once

// Orbit enumeration for the two classifications: subset pairs
// (Z0, Z1) in G/K x G/K^perp for weak coideals and multiplicity
// collections for G-algebras, modulo translations and, when K = K^perp,
// the flip of the two sides.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tyw/abelian_group.hpp"
#include "tyw/ty_wha.hpp"

namespace tyw {

// Subsets as sorted coset lists, multiplicities as full vectors.
using OrbitKey = std::pair<std::vector<int>, std::vector<int>>;

enum class PayloadKind { Subsets, Multiplicities };
enum class OrbitType { TypeI, TypeD };

// G/K x G/K^perp acting by translation, extended by the flip when K = K^perp.
class OrbitAction {
 public:
  // first_only: only G/K acts, on the first slot (single collections).
  OrbitAction(const Bicharacter& chi, const Subgroup& K, PayloadKind kind, bool allow_flip = true,
              bool first_only = false);

  const QuotientGroup& q0() const { return q0_; }
  const QuotientGroup& q1() const { return q1_; }
  bool flip() const { return flip_; }
  std::size_t size() const {
    return static_cast<std::size_t>(q0_.size()) * (first_only_ ? 1 : q1_.size()) * (flip_ ? 2 : 1);
  }
  std::string name() const { return flip_ ? "translations+flip" : "translations"; }

  OrbitKey apply(std::size_t h, const OrbitKey& s) const;
  OrbitKey canonical(const OrbitKey& s) const;
  std::vector<OrbitKey> orbit(const OrbitKey& s) const;

 private:
  std::vector<int> shift(const QuotientGroup& q, int by, const std::vector<int>& v) const;

  PayloadKind kind_;
  QuotientGroup q0_;
  QuotientGroup q1_;
  bool flip_;
  bool first_only_;
};

// (1/|H|) Σ_h |Fix(h)|. Throws StructuralError if the sum is not divisible.
std::size_t burnside_count(std::size_t group_size, const std::vector<OrbitKey>& states,
                           const std::function<OrbitKey(std::size_t, const OrbitKey&)>& act);

struct OrbitRep {
  Subgroup K;
  OrbitType type = OrbitType::TypeD;
  PayloadKind kind = PayloadKind::Subsets;
  OrbitKey canonical;
  std::size_t size = 0;
  bool coideal_flag = false;
  bool realized = false;
  bool verified = false;
};

struct KClassification {
  Subgroup K;
  Subgroup K_perp;
  OrbitType type = OrbitType::TypeD;
  std::string action;
  std::size_t action_order = 0;
  std::size_t states = 0;
  std::vector<OrbitRep> orbits;
  std::size_t burnside = 0;
  bool burnside_ok = false;
};

struct ClassificationReport {
  std::string theorem;  // "weak-coideals" or "g-algebras"
  std::vector<int> factors;
  int max_mult = 0;
  std::vector<KClassification> per_k;

  std::size_t total() const;
  std::size_t coideal_total() const;
  bool burnside_ok() const;
  bool all_realized_verified() const;
};

struct ClassifyOptions {
  int max_order = 16;
  std::size_t max_states = 2'000'000;
  bool drop_flip = false;  // fault injection
};

// Admissible shape: one side may be empty; if both are nonempty one has at most one coset.
bool admissible_pair(const OrbitKey& s);
bool coideal_flag(const OrbitKey& s, int a, int b);

ClassificationReport weak_coideal_classes(const Bicharacter& chi, const ClassifyOptions& opts = {});
// The coideal orbits listed by shape. Throws StructuralError unless there
// are 4 (K != K^perp) or 2 (K = K^perp).
std::vector<OrbitKey> coideal_orbits(const Bicharacter& chi, const Subgroup& K, const ClassifyOptions& opts = {});
ClassificationReport g_algebra_classes(const Bicharacter& chi, int max_mult, const ClassifyOptions& opts = {});

struct RealizeReport {
  std::vector<std::string> builders;
  bool verified = false;
  bool is_coideal = false;
  bool flag_agrees = false;
  bool indecomposable = false;
  bool dims_match = false;
  bool ok() const { return verified && flag_agrees && indecomposable && dims_match; }
  std::string detail;
};

// Builds the rep with the matching construction(s) and checks it. Throws
// StructuralError naming the rep on any failure.
RealizeReport realize_and_verify(const TYAlgebra& B, const OrbitRep& rep);
// Runs realize_and_verify on every weak-coideal rep and records the flags.
void realize_all(const TYAlgebra& B, ClassificationReport& report);

std::string format_key(const FiniteAbelianGroup& G, const OrbitRep& rep, const QuotientGroup& q0,
                       const QuotientGroup& q1);
std::string to_json(const Bicharacter& chi, const ClassificationReport& r);
std::string format_text(const Bicharacter& chi, const ClassificationReport& r);

}  // namespace tyw
