#include "tyw/ty_wha.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tyw/error.hpp"

namespace tyw {

TYData::TYData(FiniteAbelianGroup g, Bicharacter c, int sign)
    : G(std::move(g)), chi(std::move(c)), tau_sign(sign), tau(0.0) {
  if (!(chi.group() == G)) throw ArgumentError("bicharacter defined over a different group");
  if (!chi.is_nondegenerate()) throw InvariantError("bicharacter degenerate");
  tau = scalar::tau(sign, G.order());
}

TYAlgebra::TYAlgebra(TYData data, Tolerance tol, Faults faults)
    : data_(std::move(data)), tol_(tol), faults_(faults), n_(data_.G.order()) {
  hoff_.push_back(0);
  boff_.push_back(0);
  for (int x = 0; x <= n_; ++x) {
    hoff_.push_back(hoff_.back() + hdim(x));
    boff_.push_back(boff_.back() + hdim(x) * hdim(x));
  }
  dim_ = boff_.back();
  units_.reserve(dim_);
  for (int x = 0; x <= n_; ++x) {
    for (int a = 0; a < hdim(x); ++a) {
      for (int b = 0; b < hdim(x); ++b) units_.push_back({x, a, b});
    }
  }
  const int d0 = hdim(0);
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d0; ++b) {
      for (int c = 0; c < d0; ++c) delta_one_.emplace_back(unit_index(0, a, c), unit_index(0, c, b));
    }
  }
}

std::pair<int, int> TYAlgebra::hsplit(int f) const {
  if (f < 0 || f >= hsize()) throw ArgumentError("H index out of range");
  const auto it = std::upper_bound(hoff_.begin(), hoff_.end(), f);
  const int x = static_cast<int>(it - hoff_.begin()) - 1;
  return {x, f - hoff_[x]};
}

std::string TYAlgebra::omega_label(int x) const { return is_m(x) ? "m" : group().format(x); }

std::string TYAlgebra::h_label(int x, int a) const {
  if (!is_m(x)) return a == n_ ? "m" : group().format(a);
  return a < n_ ? group().format(a) : group().format(a - n_) + "bar";
}

std::string TYAlgebra::unit_label(int i) const {
  const auto u = units_[i];
  return "(" + omega_label(u.x) + ";" + h_label(u.x, u.row) + "," + h_label(u.x, u.col) + ")";
}

// ---- H level

std::vector<HTerm> TYAlgebra::circ_basis(int x, int a, int y, int c) const {
  const auto& G = group();
  const auto& chi = data_.chi;
  std::vector<HTerm> r;
  if (!is_m(x) && !is_m(y)) {
    const int g = x, h = y;
    if (a < n_ && c < n_) {
      // v^g_k ∘ v^h_x = δ_{x,h+k} v^{g+h}_{h+k}
      if (c == G.add(h, a)) r.push_back({G.add(g, h), c, 1.0});
    } else if (a == n_ && c == n_) {
      r.push_back({G.add(g, h), n_, 1.0});
    }
  } else if (is_m(x) && !is_m(y)) {
    const int g = y;
    if (a < n_) {
      // v^m_k ∘ v^g_m = χ(g,k) v^m_k
      if (c == n_) r.push_back({n_, a, chi.value(g, a)});
    } else {
      // v^m_kbar ∘ v^g_x = δ_{x,g+k} v^m_{(g+k)bar}
      const int k = a - n_;
      if (c < n_ && c == G.add(g, k)) r.push_back({n_, bar(c), 1.0});
    }
  } else if (!is_m(x) && is_m(y)) {
    const int g = x;
    if (c >= n_) {
      // v^g_m ∘ v^m_kbar = χ(g,k) v^m_kbar
      if (a == n_) r.push_back({n_, c, chi.value(g, c - n_)});
    } else {
      // v^g_x ∘ v^m_k = δ_{x,k} v^m_{k-g}
      if (a == c) r.push_back({n_, G.sub(c, g), 1.0});
    }
  } else {
    if (a < n_ && c >= n_) {
      // v^m_h ∘ v^m_kbar = v^{k-h}_k
      const int h = a, k = c - n_;
      r.push_back({G.sub(k, h), k, 1.0});
    } else if (a >= n_ && c < n_ && a - n_ == c) {
      // v^m_hbar ∘ v^m_h = τ Σ_g χ(g,h)^{-1} v^g_m
      for (int g = 0; g < n_; ++g) r.push_back({g, n_, data_.tau * std::conj(chi.value(g, c))});
    }
  }
  return r;
}

HVector TYAlgebra::h_circ(const HVector& u, const HVector& w) const {
  HVector out;
  for (const auto& [fu, cu] : u.data()) {
    const auto [x, a] = hsplit(fu);
    for (const auto& [fw, cw] : w.data()) {
      const auto [y, c] = hsplit(fw);
      for (const auto& t : circ_basis(x, a, y, c)) out.add(hflat(t.x, t.a), cu * cw * t.c);
    }
  }
  return out.prune(tol_);
}

HTerm TYAlgebra::sharp_basis(int x, int a) const {
  const auto& G = group();
  if (!is_m(x)) {
    const int nx = G.neg(x);
    if (a == n_) return {nx, n_, 1.0};
    return {nx, G.sub(a, x), 1.0};
  }
  const double rn = std::sqrt(static_cast<double>(n_));
  if (a < n_) return {n_, bar(a), rn};
  const double s = faults_.flip_tau_in_sharp ? -1.0 : 1.0;
  return {n_, a - n_, s * rn / data_.tau};
}

HTerm TYAlgebra::flat_basis(int x, int a) const {
  HTerm t = sharp_basis(x, a);
  t.c = 1.0 / std::conj(t.c);
  return t;
}

HVector TYAlgebra::h_sharp(const HVector& u) const {
  HVector out;
  for (const auto& [f, c] : u.data()) {
    const auto [x, a] = hsplit(f);
    const auto t = sharp_basis(x, a);
    out.add(hflat(t.x, t.a), std::conj(c) * t.c);
  }
  return out.prune(tol_);
}

// ---- B level

void TYAlgebra::multiply_units(int i, int j, std::vector<std::pair<int, cplx>>& out) const {
  out.clear();
  const auto u = units_[i], v = units_[j];
  const auto p = circ_basis(u.x, u.row, v.x, v.row);
  if (p.empty()) return;
  const auto q = circ_basis(u.x, u.col, v.x, v.col);
  for (const auto& pt : p) {
    for (const auto& qt : q) {
      if (pt.x == qt.x) out.emplace_back(unit_index(pt.x, pt.a, qt.a), pt.c * std::conj(qt.c));
    }
  }
}

Vec TYAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out;
  std::vector<std::pair<int, cplx>> buf;
  for (const auto& [i, ca] : a.data()) {
    for (const auto& [j, cb] : b.data()) {
      multiply_units(i, j, buf);
      for (const auto& [k, c] : buf) out.add(k, ca * cb * c);
    }
  }
  return out.prune(tol_);
}

Vec TYAlgebra::unit() const {
  Vec one;
  for (int a = 0; a <= n_; ++a) {
    for (int b = 0; b <= n_; ++b) one.add(unit_index(0, a, b), 1.0);
  }
  return one;
}

TensorVec TYAlgebra::coproduct(const Vec& v) const {
  TensorVec out;
  for (const auto& [i, c] : v.data()) {
    const auto u = units_[i];
    for (int k = 0; k < hdim(u.x); ++k) out.add(tidx(unit_index(u.x, u.row, k), unit_index(u.x, k, u.col)), c);
  }
  return out.prune(tol_);
}

cplx TYAlgebra::counit(const Vec& v) const {
  cplx s = 0.0;
  for (const auto& [i, c] : v.data()) {
    if (units_[i].row == units_[i].col) s += c;
  }
  return s;
}

Vec TYAlgebra::star(const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v.data()) {
    const auto u = units_[i];
    const auto s = sharp_basis(u.x, u.row);
    const auto f = flat_basis(u.x, u.col);
    out.add(unit_index(s.x, s.a, f.a), std::conj(c) * s.c * f.c);
  }
  return out.prune(tol_);
}

Vec TYAlgebra::antipode(const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v.data()) {
    const auto u = units_[i];
    const auto s = sharp_basis(u.x, u.col);
    const auto f = flat_basis(u.x, u.row);
    out.add(unit_index(s.x, s.a, f.a), c * s.c * f.c);
  }
  return out.prune(tol_);
}

Vec TYAlgebra::eps_t(const Vec& b) const {
  // (ε⊗id)(Δ(1)(b⊗1)) = Σ_{(p,q)} ε(e_p b) e_q
  Vec out;
  std::vector<std::pair<int, cplx>> buf;
  for (const auto& [p, q] : delta_one_) {
    cplx s = 0.0;
    for (const auto& [i, c] : b.data()) {
      multiply_units(p, i, buf);
      for (const auto& [k, ck] : buf) {
        if (units_[k].row == units_[k].col) s += c * ck;
      }
    }
    if (s != cplx{}) out.add(q, s);
  }
  return out.prune(tol_);
}

Vec TYAlgebra::eps_s(const Vec& b) const {
  // (id⊗ε)((1⊗b)Δ(1)) = Σ_{(p,q)} ε(b e_q) e_p
  Vec out;
  std::vector<std::pair<int, cplx>> buf;
  for (const auto& [p, q] : delta_one_) {
    cplx s = 0.0;
    for (const auto& [i, c] : b.data()) {
      multiply_units(i, q, buf);
      for (const auto& [k, ck] : buf) {
        if (units_[k].row == units_[k].col) s += c * ck;
      }
    }
    if (s != cplx{}) out.add(p, s);
  }
  return out.prune(tol_);
}

std::pair<Subspace, Subspace> TYAlgebra::counital_subalgebras() const {
  Subspace bt(dim_, tol_), bs(dim_, tol_);
  for (int i = 0; i < dim_; ++i) {
    bt.insert(eps_t(basis(i)));
    bs.insert(eps_s(basis(i)));
  }
  return {bt, bs};
}

Subspace TYAlgebra::center() const {
  // Shrink the candidate space one commutator constraint at a time.
  std::vector<Vec> cand;
  for (int i = 0; i < dim_; ++i) cand.push_back(basis(i));
  for (int j = 0; j < dim_ && !cand.empty(); ++j) {
    const Vec ej = basis(j);
    std::vector<Vec> images;
    images.reserve(cand.size());
    for (const auto& c : cand) images.push_back(multiply(c, ej) - multiply(ej, c));
    const auto ker = kernel_of_images(images, tol_);
    std::vector<Vec> next;
    for (const auto& coef : ker) {
      Vec v;
      for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i] != cplx{}) v.axpy(coef[i], cand[i]);
      }
      next.push_back(v.prune(Tolerance{0.0}));
    }
    cand = std::move(next);
  }
  return Subspace::span(dim_, cand, tol_);
}

// ---- tensors

TensorVec TYAlgebra::tensor(const Vec& a, const Vec& b) const {
  TensorVec out;
  for (const auto& [i, ca] : a.data()) {
    for (const auto& [j, cb] : b.data()) out.add(tidx(i, j), ca * cb);
  }
  return out;
}

TensorVec TYAlgebra::tensor_multiply(const TensorVec& s, const TensorVec& t) const {
  TensorVec out;
  std::vector<std::pair<int, cplx>> left, right;
  for (const auto& [st, cs] : s.data()) {
    const auto [p, q] = tsplit(st);
    for (const auto& [tt, ct] : t.data()) {
      const auto [r, u] = tsplit(tt);
      multiply_units(p, r, left);
      if (left.empty()) continue;
      multiply_units(q, u, right);
      for (const auto& [k, ck] : left) {
        for (const auto& [l, cl] : right) out.add(tidx(k, l), cs * ct * ck * cl);
      }
    }
  }
  return out.prune(tol_);
}

TensorVec TYAlgebra::tensor_star(const TensorVec& s) const {
  TensorVec out;
  for (const auto& [t, c] : s.data()) {
    const auto [p, q] = tsplit(t);
    const Vec sp = star(basis(p)), sq = star(basis(q));
    const auto& [kp, cp] = *sp.data().begin();
    const auto& [kq, cq] = *sq.data().begin();
    out.add(tidx(kp, kq), std::conj(c) * cp * cq);
  }
  return out.prune(tol_);
}

// ---- Haar

TYAlgebra::HaarResult TYAlgebra::haar() const {
  std::vector<Vec> rows;
  std::vector<cplx> rhs;
  std::vector<Vec> et(dim_);
  for (int i = 0; i < dim_; ++i) et[i] = eps_t(basis(i));

  // h∘ε_t = ε
  for (int i = 0; i < dim_; ++i) {
    rows.push_back(et[i]);
    rhs.push_back(units_[i].row == units_[i].col ? 1.0 : 0.0);
  }
  // (id⊗h)Δ(1) = 1
  {
    std::map<int, Vec> by_first;
    for (const auto& [p, q] : delta_one_) by_first[p].add(q, 1.0);
    const Vec one = unit();
    for (auto& [p, row] : by_first) {
      rows.push_back(row);
      rhs.push_back(one[p]);
    }
  }
  // h∘S = h
  for (int i = 0; i < dim_; ++i) {
    Vec row = antipode(basis(i));
    row.add(i, -1.0);
    rows.push_back(row.prune(Tolerance{0.0}));
    rhs.push_back(0.0);
  }
  // (id⊗h)Δ(b) = (ε_t⊗h)Δ(b): Σ_c (e_{x;a,c} - ε_t(e_{x;a,c})) h(x;c,b) = 0 in B
  for (int i = 0; i < dim_; ++i) {
    const auto u = units_[i];
    std::map<int, Vec> by_coord;
    for (int c = 0; c < hdim(u.x); ++c) {
      const int left = unit_index(u.x, u.row, c);
      const int hvar = unit_index(u.x, c, u.col);
      by_coord[left].add(hvar, 1.0);
      for (const auto& [t, ct] : et[left].data()) by_coord[t].add(hvar, -ct);
    }
    for (auto& [t, row] : by_coord) {
      row.prune(Tolerance{0.0});
      if (row.empty()) continue;
      rows.push_back(row);
      rhs.push_back(0.0);
    }
  }

  const auto sol = solve_affine(dim_, rows, rhs, tol_);
  if (sol.status == AffineSolution::Status::Inconsistent) {
    throw StructuralError("Haar system inconsistent (residual " + std::to_string(sol.max_residual) + ")");
  }
  if (sol.status == AffineSolution::Status::Underdetermined) {
    throw StructuralError("Haar system has a " + std::to_string(dim_ - sol.rank) + "-dimensional solution set");
  }
  return {sol.x, sol.rank, sol.max_residual};
}

cplx TYAlgebra::apply(const std::vector<cplx>& functional, const Vec& b) const {
  cplx s = 0.0;
  for (const auto& [i, c] : b.data()) s += functional.at(i) * c;
  return s;
}

// ---- dual algebra

DualBlockMatrix TYAlgebra::dual_identity() const {
  DualBlockMatrix phi(n_ + 1);
  for (int x = 0; x <= n_; ++x) {
    const int d = hdim(x);
    phi[x].assign(static_cast<std::size_t>(d) * d, 0.0);
    for (int a = 0; a < d; ++a) phi[x][a * d + a] = 1.0;
  }
  return phi;
}

cplx TYAlgebra::dual_pairing(const DualBlockMatrix& phi, const Vec& b) const {
  cplx s = 0.0;
  for (const auto& [i, c] : b.data()) {
    const auto u = units_[i];
    s += c * phi.at(u.x).at(u.col * hdim(u.x) + u.row);
  }
  return s;
}

cplx TYAlgebra::dual_pairing(const DualBlockMatrix& phi, const DualBlockMatrix& psi, const TensorVec& t) const {
  cplx s = 0.0;
  for (const auto& [k, c] : t.data()) {
    const auto [p, q] = tsplit(k);
    s += c * dual_pairing(phi, basis(p)) * dual_pairing(psi, basis(q));
  }
  return s;
}

DualBlockMatrix TYAlgebra::dual_product(const DualBlockMatrix& phi, const DualBlockMatrix& psi) const {
  DualBlockMatrix out(n_ + 1);
  for (int x = 0; x <= n_; ++x) {
    const int d = hdim(x);
    out[x].assign(static_cast<std::size_t>(d) * d, 0.0);
    for (int r = 0; r < d; ++r) {
      for (int k = 0; k < d; ++k) {
        const cplx a = psi.at(x).at(r * d + k);
        if (a == cplx{}) continue;
        for (int c = 0; c < d; ++c) out[x][r * d + c] += a * phi[x][k * d + c];
      }
    }
  }
  return out;
}

// ---- corepresentations

std::vector<std::vector<Vec>> TYAlgebra::corep_matrix(int x) const {
  const int d = hdim(x);
  std::vector<std::vector<Vec>> u(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) u[i][j] = basis(unit_index(x, i, j));
  }
  return u;
}

TYAlgebra::CorepReport TYAlgebra::verify_corepresentation(int x) const {
  CorepReport rep;
  rep.x = x;
  const auto U = corep_matrix(x);
  const int d = hdim(x);
  std::vector<std::vector<Vec>> Us(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) Us[i][j] = star(U[j][i]);
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      TensorVec rhs;
      for (int k = 0; k < d; ++k) rhs += tensor(U[i][k], U[k][j]);
      rep.coproduct_residual = std::max(rep.coproduct_residual, max_abs_diff(coproduct(U[i][j]), rhs));
      rep.counit_residual = std::max(rep.counit_residual, std::abs(counit(U[i][j]) - (i == j ? 1.0 : 0.0)));
      Vec uuu;
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) uuu += multiply(multiply(U[i][k], Us[k][l]), U[l][j]);
      }
      rep.partial_isometry_residual = std::max(rep.partial_isometry_residual, max_abs_diff(uuu, U[i][j]));
    }
  }
  return rep;
}

}  // namespace tyw
