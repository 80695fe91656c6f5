#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tyw/error.hpp"
#include "tyw/kernels.hpp"
#include "tyw/linalg.hpp"

namespace tyw {

double scalar::tau(int sign, int order) {
  if (sign != 1 && sign != -1) throw ArgumentError("tau sign must be +1 or -1");
  return sign / std::sqrt(static_cast<double>(order));
}

namespace {

double dense_norm(const std::vector<cplx>& v) { return std::sqrt(kernels::norm2(v.data(), v.size())); }

}  // namespace

Subspace Subspace::span(std::size_t universe, const std::vector<Vec>& vectors, Tolerance tol) {
  Subspace s(universe, tol);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::span_dense(std::size_t universe, const std::vector<std::vector<cplx>>& vectors, Tolerance tol) {
  Subspace s(universe, tol);
  for (const auto& v : vectors) s.insert_dense(v);
  return s;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(Vec::from_dense(r, Tolerance{0.0}));
  return out;
}

std::vector<cplx> Subspace::reduce(const Vec& v) const {
  std::vector<cplx> d(n_);
  for (const auto& [i, c] : v.data()) {
    if (i < 0 || static_cast<std::size_t>(i) >= n_) throw ArgumentError("vector index outside subspace universe");
    d[i] = c;
  }
  // RREF rows vanish on every other pivot, so the coefficient of row r is
  // just v[pivot r] and only pivots in the support of v contribute.
  for (const auto& [i, c] : v.data()) {
    const auto r = row_of_pivot_[i];
    if (r >= 0) kernels::axpy(d.data(), -c, rows_[r].data(), n_);
  }
  return d;
}

std::vector<cplx> Subspace::reduce_dense(std::vector<cplx> v) const {
  if (v.size() != n_) throw ArgumentError("vector length differs from subspace universe");
  std::vector<cplx> coef(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) coef[r] = v[pivots_[r]];
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (coef[r] != cplx{}) kernels::axpy(v.data(), -coef[r], rows_[r].data(), n_);
  }
  return v;
}

double Subspace::residual(const Vec& v) const { return dense_norm(reduce(v)); }

bool Subspace::contains(const Vec& v) const { return residual(v) <= threshold(v.norm()); }

bool Subspace::contains_dense(const std::vector<cplx>& v) const {
  return dense_norm(reduce_dense(v)) <= threshold(dense_norm(v));
}

bool Subspace::contains_all(const std::vector<Vec>& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw ArgumentError("subspaces over different universes");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& r) { return contains_dense(r); });
}

bool Subspace::insert(const Vec& v) {
  const double vn = v.norm();
  auto d = reduce(v);
  if (dense_norm(d) <= threshold(vn)) return false;
  add_reduced(std::move(d));
  return true;
}

bool Subspace::insert_dense(std::vector<cplx> v) {
  if (v.size() != n_) throw ArgumentError("vector length differs from subspace universe");
  const double vn = dense_norm(v);
  v = reduce_dense(std::move(v));
  if (dense_norm(v) <= threshold(vn)) return false;
  add_reduced(std::move(v));
  return true;
}

void Subspace::add_reduced(std::vector<cplx> v) {
  const std::size_t p = kernels::argmax_abs(v.data(), n_);
  kernels::scale(v.data(), 1.0 / v[p], n_);
  v[p] = 1.0;
  for (auto& r : rows_) {
    const cplx c = r[p];
    if (c != cplx{}) {
      kernels::axpy(r.data(), -c, v.data(), n_);
      r[p] = 0.0;
    }
  }
  row_of_pivot_[p] = static_cast<std::ptrdiff_t>(rows_.size());
  pivots_.push_back(p);
  rows_.push_back(std::move(v));
}

std::vector<std::vector<cplx>> Subspace::nullspace() const {
  std::vector<std::vector<cplx>> out;
  for (std::size_t f = 0; f < n_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    std::vector<cplx> x(n_);
    x[f] = 1.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = -rows_[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.universe() != t.universe()) throw ArgumentError("subspaces over different universes");
  Subspace out = s;
  for (const auto& r : t.rows()) out.insert_dense(r);
  return out;
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.universe() != t.universe()) throw ArgumentError("subspaces over different universes");
  const Tolerance tol = s.tolerance();
  // sum_i a_i s_i - sum_j b_j t_j = 0  gives  sum_i a_i s_i in s ∩ t.
  std::vector<Vec> images;
  for (const auto& r : s.rows()) images.push_back(Vec::from_dense(r, Tolerance{0.0}));
  for (const auto& r : t.rows()) images.push_back(-1.0 * Vec::from_dense(r, Tolerance{0.0}));
  Subspace out(s.universe(), tol);
  for (const auto& c : kernel_of_images(images, tol)) {
    std::vector<cplx> v(s.universe());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (c[i] != cplx{}) kernels::axpy(v.data(), c[i], s.rows()[i].data(), v.size());
    }
    out.insert_dense(std::move(v));
  }
  return out;
}

bool equal(const Subspace& s, const Subspace& t) {
  return s.dim() == t.dim() && s.contains(t) && t.contains(s);
}

template <class Idx>
std::vector<std::vector<cplx>> kernel_of_images(const std::vector<SparseVector<Idx>>& images, const Tolerance& tol) {
  const std::size_t k = images.size();
  std::vector<Idx> support;
  for (const auto& im : images) {
    for (const auto& kv : im.data()) support.push_back(kv.first);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::unordered_map<Idx, std::size_t> col;
  col.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) col[support[i]] = i;

  const std::size_t L = support.size();
  const std::size_t W = L + k;
  // Rows are [image | e_i]; plain forward elimination in insertion order.
  std::vector<std::vector<cplx>> piv_rows;
  std::vector<std::size_t> piv_cols;
  std::vector<std::vector<cplx>> kernel;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<cplx> row(W);
    for (const auto& [idx, c] : images[i].data()) row[col[idx]] = c;
    row[L + i] = 1.0;
    const double scale = std::sqrt(kernels::norm2(row.data(), L));
    for (std::size_t r = 0; r < piv_rows.size(); ++r) {
      const cplx c = row[piv_cols[r]];
      if (c != cplx{}) kernels::axpy(row.data(), -c, piv_rows[r].data(), W);
    }
    const double res = std::sqrt(kernels::norm2(row.data(), L));
    if (res <= tol.eps * (1.0 + scale)) {
      kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(L), row.end());
      continue;
    }
    const std::size_t p = kernels::argmax_abs(row.data(), L);
    kernels::scale(row.data(), 1.0 / row[p], W);
    row[p] = 1.0;
    piv_cols.push_back(p);
    piv_rows.push_back(std::move(row));
  }
  return kernel;
}

template std::vector<std::vector<cplx>> kernel_of_images<int>(const std::vector<SparseVector<int>>&,
                                                              const Tolerance&);
template std::vector<std::vector<cplx>> kernel_of_images<std::int64_t>(
    const std::vector<SparseVector<std::int64_t>>&, const Tolerance&);

AffineSolution solve_affine(std::size_t n, const std::vector<Vec>& rows, const std::vector<cplx>& rhs,
                            const Tolerance& tol) {
  if (rows.size() != rhs.size()) throw ArgumentError("affine system: rows and rhs differ in length");
  AffineSolution sol;
  // Echelon rows over the n unknowns with the right-hand side carried in the
  // extra last slot; pivots are never taken in that slot.
  std::vector<std::vector<cplx>> ech;
  std::vector<std::ptrdiff_t> row_of(n, -1);
  std::vector<std::size_t> piv;
  bool inconsistent = false;
  for (std::size_t e = 0; e < rows.size() && ech.size() < n; ++e) {
    std::vector<cplx> r(n + 1);
    for (const auto& [i, c] : rows[e].data()) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) throw ArgumentError("affine row index out of range");
      r[i] = c;
    }
    r[n] = rhs[e];
    const double rn = std::sqrt(kernels::norm2(r.data(), n));
    for (const auto& [i, c] : rows[e].data()) {
      const auto ri = row_of[i];
      if (ri >= 0 && c != cplx{}) kernels::axpy(r.data(), -c, ech[ri].data(), n + 1);
    }
    const double res = std::sqrt(kernels::norm2(r.data(), n));
    if (res <= tol.eps * (1.0 + rn)) {
      if (std::abs(r[n]) > tol.eps * (1.0 + std::abs(rhs[e]))) inconsistent = true;
      continue;
    }
    const std::size_t p = kernels::argmax_abs(r.data(), n);
    kernels::scale(r.data(), 1.0 / r[p], n + 1);
    r[p] = 1.0;
    for (auto& q : ech) {
      const cplx c = q[p];
      if (c != cplx{}) {
        kernels::axpy(q.data(), -c, r.data(), n + 1);
        q[p] = 0.0;
      }
    }
    row_of[p] = static_cast<std::ptrdiff_t>(ech.size());
    piv.push_back(p);
    ech.push_back(std::move(r));
  }
  sol.rank = ech.size();
  sol.x.assign(n, cplx{});
  for (std::size_t r = 0; r < ech.size(); ++r) sol.x[piv[r]] = ech[r][n];
  for (std::size_t e = 0; e < rows.size(); ++e) {
    cplx acc = -rhs[e];
    for (const auto& [i, c] : rows[e].data()) acc += c * sol.x[i];
    sol.max_residual = std::max(sol.max_residual, std::abs(acc));
  }
  if (inconsistent || sol.max_residual > tol.eps) {
    sol.status = AffineSolution::Status::Inconsistent;
  } else if (sol.rank < n) {
    sol.status = AffineSolution::Status::Underdetermined;
  } else {
    sol.status = AffineSolution::Status::Unique;
  }
  return sol;
}

}  // namespace tyw
