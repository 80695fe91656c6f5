#pragma once

// The weak Hopf C*-algebra of a Tambara-Yamagami category TY(G, chi, tau).
//
// Labels: Omega = G ⊔ {m}, encoded as 0..n-1 for group elements and n for m
// (n = |G|). H^g has basis v^g_h (h in G, index h) and v^g_m (index n);
// H^m has basis v^m_g (index g) and v^m_{gbar} (index n+g).
//
// B = ⊕_x H^x ⊗ conj(H^x) with matrix-unit basis (x; a, b) = v^x_a ⊗ vbar^x_b.
// Basis units are numbered block by block, row-major inside each block.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tyw/abelian_group.hpp"
#include "tyw/linalg.hpp"

namespace tyw {

struct TYData {
  // Throws InvariantError("bicharacter degenerate") for degenerate chi and
  // ArgumentError for tau_sign outside {+1,-1} or chi over another group.
  TYData(FiniteAbelianGroup g, Bicharacter c, int tau_sign);

  FiniteAbelianGroup G;
  Bicharacter chi;
  int tau_sign;
  double tau;
};

// Deliberate corruptions, used to show the verification suites detect them.
struct Faults {
  // Negates the tau^{-1} coefficient of (v^m_{gbar})^sharp only. Antipode
  // and involution are derived from sharp and inherit the error; the product
  // does not.
  bool flip_tau_in_sharp = false;
};

struct BasisUnit {
  int x;
  int row;
  int col;
  friend bool operator==(const BasisUnit&, const BasisUnit&) = default;
};

// One term c * v^x_a of an H-vector.
struct HTerm {
  int x;
  int a;
  cplx c;
};

using HVector = Vec;  // over flat H indices, see TYAlgebra::hflat
using DualBlockMatrix = std::vector<std::vector<cplx>>;  // per x, row-major dim(H^x)^2

class TYAlgebra {
 public:
  explicit TYAlgebra(TYData data, Tolerance tol = {}, Faults faults = {});

  const TYData& data() const { return data_; }
  const FiniteAbelianGroup& group() const { return data_.G; }
  const Tolerance& tolerance() const { return tol_; }
  const Faults& faults() const { return faults_; }

  int n() const { return n_; }
  int m() const { return n_; }
  int omega_size() const { return n_ + 1; }
  bool is_m(int x) const { return x == n_; }
  int hdim(int x) const { return x == n_ ? 2 * n_ : n_ + 1; }
  int dim() const { return dim_; }

  // H-index helpers.
  int mvec() const { return n_; }
  int unb(int g) const { return g; }
  int bar(int g) const { return n_ + g; }

  // Flat index over ⊕_x H^x.
  int hsize() const { return hoff_.back(); }
  int hflat(int x, int a) const { return hoff_[x] + a; }
  std::pair<int, int> hsplit(int f) const;

  int unit_index(int x, int a, int b) const { return boff_[x] + a * hdim(x) + b; }
  BasisUnit unit_at(int i) const { return units_[i]; }
  int block_offset(int x) const { return boff_[x]; }

  std::string omega_label(int x) const;
  std::string h_label(int x, int a) const;
  std::string unit_label(int i) const;

  Vec basis(int i) const { return Vec::unit(i); }
  HVector h_basis(int x, int a) const { return HVector::unit(hflat(x, a)); }

  // ---- H level
  // v^x_a ∘ v^y_c as a short list of terms.
  std::vector<HTerm> circ_basis(int x, int a, int y, int c) const;
  HVector h_circ(const HVector& u, const HVector& w) const;
  // (c v^x_a)^sharp = conj(c) * coef * v^{x*}_{a'}
  HTerm sharp_basis(int x, int a) const;
  // Companion on the conjugate leg: if (v)^sharp = c v' then (vbar)^flat = conj(c)^{-1} vbar'.
  HTerm flat_basis(int x, int a) const;
  HVector h_sharp(const HVector& u) const;

  // ---- B level
  // (x;a,b)(y;c,d) as a short list of (unit index, coefficient).
  void multiply_units(int i, int j, std::vector<std::pair<int, cplx>>& out) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec unit() const;
  TensorVec coproduct(const Vec& a) const;
  cplx counit(const Vec& a) const;
  Vec star(const Vec& a) const;
  Vec antipode(const Vec& a) const;
  Vec eps_t(const Vec& a) const;
  Vec eps_s(const Vec& a) const;
  // (B_t, B_s)
  std::pair<Subspace, Subspace> counital_subalgebras() const;
  Subspace center() const;

  // ---- tensors in B ⊗ B (index i*dim + j) and B ⊗ B ⊗ B
  std::int64_t tidx(int i, int j) const { return static_cast<std::int64_t>(i) * dim_ + j; }
  std::pair<int, int> tsplit(std::int64_t t) const { return {static_cast<int>(t / dim_), static_cast<int>(t % dim_)}; }
  TensorVec tensor(const Vec& a, const Vec& b) const;
  TensorVec tensor_multiply(const TensorVec& s, const TensorVec& t) const;
  TensorVec tensor_star(const TensorVec& s) const;

  // ---- Haar functional, as the vector h_i = h(e_i). Throws StructuralError
  // unless the defining system has exactly one solution.
  struct HaarResult {
    std::vector<cplx> h;
    std::size_t rank = 0;
    double max_residual = 0.0;
  };
  HaarResult haar() const;
  cplx apply(const std::vector<cplx>& functional, const Vec& b) const;

  // ---- dual algebra
  DualBlockMatrix dual_identity() const;
  cplx dual_pairing(const DualBlockMatrix& phi, const Vec& b) const;
  cplx dual_pairing(const DualBlockMatrix& phi, const DualBlockMatrix& psi, const TensorVec& t) const;
  // The product for which <phi psi, b> = <phi ⊗ psi, Δ(b)>: blockwise psi_x * phi_x.
  DualBlockMatrix dual_product(const DualBlockMatrix& phi, const DualBlockMatrix& psi) const;

  // ---- corepresentations U^x = [(x;i,j)]_{ij}
  struct CorepReport {
    int x = 0;
    double coproduct_residual = 0.0;      // (id⊗Δ)U - U12 U13
    double counit_residual = 0.0;         // (id⊗ε)U - id
    double partial_isometry_residual = 0.0;  // U U* U - U
    bool ok(double eps) const {
      return coproduct_residual <= eps && counit_residual <= eps && partial_isometry_residual <= eps;
    }
  };
  std::vector<std::vector<Vec>> corep_matrix(int x) const;
  CorepReport verify_corepresentation(int x) const;

  // Δ(1) as a list of (p, q) unit pairs with coefficient 1.
  const std::vector<std::pair<int, int>>& delta_one() const { return delta_one_; }

 private:
  TYData data_;
  Tolerance tol_;
  Faults faults_;
  int n_;
  int dim_;
  std::vector<int> hoff_;
  std::vector<int> boff_;
  std::vector<BasisUnit> units_;
  std::vector<std::pair<int, int>> delta_one_;
};

}  // namespace tyw
