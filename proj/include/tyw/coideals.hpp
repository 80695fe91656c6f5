#pragma once

// Weak coideal subalgebras A = ⊕_x X^x ⊗ conj(H^x) of the TY algebra, built
// from coset data (K, Z0, Z1) and checked by subspace membership.

#include <optional>
#include <string>
#include <vector>

#include "tyw/abelian_group.hpp"
#include "tyw/linalg.hpp"
#include "tyw/ty_wha.hpp"

namespace tyw {

// Z0 indexes cosets of G/K, Z1 cosets of G/K^perp (QuotientGroup order).
struct CoidealSpec {
  Subgroup K;
  std::vector<int> Z0;
  std::vector<int> Z1;
};

struct WeakCoideal {
  std::string builder;
  std::optional<CoidealSpec> spec;
  std::optional<int> rho0;                // coset of K^perp recorded by build_with_m
  std::vector<std::vector<HVector>> X;    // X[x]: basis of X^x inside H^x (flat H indices)
  std::vector<Vec> generators;            // u ⊗ vbar^x_y for u in X[x], y in Omega_x
  Subspace A;
  Vec unit;

  std::vector<int> dims() const;
  std::size_t dim() const { return A.dim(); }
};

struct BuildFaults {
  // build_with_m: omit v^g_m from X^g for the largest g in K^perp.
  bool drop_vgm = false;
};

HVector coset_vector(const TYAlgebra& B, int x, const std::vector<int>& members, bool barred);

// Assemble A and its generators from an X-family; `unit` is taken as given.
WeakCoideal assemble(const TYAlgebra& B, std::string builder, std::vector<std::vector<HVector>> X, Vec unit);

// side 0: Z ⊆ G/K; side 1: Z ⊆ G/K^perp and K^perp plays the role of K.
WeakCoideal build_no_m(const TYAlgebra& B, const Subgroup& K, const std::vector<int>& Z, int side);
WeakCoideal build_with_m(const TYAlgebra& B, const Subgroup& K, const std::vector<int>& Z, int rho0,
                         BuildFaults faults = {});
// Dispatch on the shape of (Z0, Z1): one empty side gives build_no_m on the
// other side; otherwise build_with_m on the side whose partner is a single
// coset, preferring the unital choice when Z1 = G/K^perp and |Z0| = 1.
WeakCoideal build_from_pair(const TYAlgebra& B, const Subgroup& K, const std::vector<int>& Z0,
                            const std::vector<int>& Z1, BuildFaults faults = {});
WeakCoideal build_I_m_K(const TYAlgebra& B, const Subgroup& K);
WeakCoideal build_I_Omega_K(const TYAlgebra& B, const Subgroup& K);

struct ConditionResult {
  std::string name;
  bool passed = true;
  double max_residual = 0.0;
  std::size_t cases = 0;
  std::string witness;
};

struct CoidealReport {
  std::vector<ConditionResult> conditions;
  bool passed() const;
};

// (i) closed under multiply, (ii) closed under star, (iii) Δ(A) ⊆ A⊗B,
// (iv) unit_A is a two-sided unit of A, (v) Δ(1_A) ∈ A⊗B_t, plus the unit
// shape v^0_Γ ⊗ vbar^0_Ω read off from X^0.
CoidealReport verify_weak_coideal(const TYAlgebra& B, const WeakCoideal& A);

bool is_coideal(const TYAlgebra& B, const WeakCoideal& A);

struct X0Partition {
  std::vector<std::vector<int>> blocks;  // points of Omega_0 (m = n), each block sorted
  std::vector<int> gamma;                // union of the blocks
  int k0 = 0;
};
// Throws StructuralError if X^0 is not the span of indicator vectors of a
// partition (i.e. not a ∘/♯-closed subalgebra of H^0).
X0Partition x0_partition(const TYAlgebra& B, const WeakCoideal& A);

Subspace center(const TYAlgebra& B, const WeakCoideal& A);
Subspace fixed_point_algebra(const TYAlgebra& B, const WeakCoideal& A);
// dim(Z(A) ∩ A^a) as computed; indecomposable iff 1.
int center_fixed_dim(const TYAlgebra& B, const WeakCoideal& A);
bool is_indecomposable(const TYAlgebra& B, const WeakCoideal& A);

// The multiplicity-data dimension formulas: entry x is dim X^x (x = n is m).
// TypeD uses collections m0 on G/K and m1 on G/K^perp; TypeI uses m on G/K.
std::vector<int> spectral_dims_type_d(const FiniteAbelianGroup& G, const QuotientGroup& q0, const QuotientGroup& q1,
                                      const std::vector<int>& m0, const std::vector<int>& m1);
std::vector<int> spectral_dims_type_i(const FiniteAbelianGroup& G, const QuotientGroup& q, const std::vector<int>& m);
std::vector<int> spectral_dims(const Bicharacter& chi, const CoidealSpec& spec);

// Coset indices from representatives; throws ArgumentError for malformed input.
std::vector<int> cosets_from_reps(const FiniteAbelianGroup& G, const QuotientGroup& q, const std::vector<int>& reps);

}  // namespace tyw
