#pragma once

// Complex scalars with a tolerance, sparse vectors over an integer index
// universe, and subspaces held in reduced row-echelon form.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "tyw/abelian_group.hpp"

namespace tyw {

using cplx = std::complex<double>;

struct Tolerance {
  double eps = 1e-9;

  bool is_zero(cplx z) const { return std::abs(z) <= eps; }
  bool equal(cplx a, cplx b) const { return std::abs(a - b) <= eps; }
};

namespace scalar {
inline cplx from_phase(const Phase& t) { return t.value(); }
// tau = sign * |G|^{-1/2}
double tau(int sign, int order);
inline double sqrt_order(int order) { return std::sqrt(static_cast<double>(order)); }
}  // namespace scalar

// Map from basis index to coefficient. Entries are dropped when pruned;
// arithmetic keeps whatever it produces until prune() is called.
template <class Idx>
class SparseVector {
 public:
  using map_type = std::map<Idx, cplx>;

  SparseVector() = default;
  static SparseVector unit(Idx i, cplx c = 1.0) {
    SparseVector v;
    v.data_[i] = c;
    return v;
  }

  const map_type& data() const& { return data_; }
  // By value on temporaries, so `for (auto& kv : f().data())` stays valid.
  map_type data() && { return std::move(data_); }
  std::size_t nnz() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  cplx operator[](Idx i) const {
    auto it = data_.find(i);
    return it == data_.end() ? cplx{} : it->second;
  }
  void add(Idx i, cplx c) { data_[i] += c; }
  void axpy(cplx a, const SparseVector& o) {
    for (const auto& [i, c] : o.data_) data_[i] += a * c;
  }
  SparseVector& operator+=(const SparseVector& o) {
    axpy(1.0, o);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    axpy(-1.0, o);
    return *this;
  }
  SparseVector& operator*=(cplx a) {
    for (auto& kv : data_) kv.second *= a;
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(cplx s, SparseVector a) { return a *= s; }

  SparseVector& prune(const Tolerance& tol) {
    for (auto it = data_.begin(); it != data_.end();) {
      it = tol.is_zero(it->second) ? data_.erase(it) : std::next(it);
    }
    return *this;
  }

  double norm() const {
    double s = 0;
    for (const auto& kv : data_) s += std::norm(kv.second);
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0;
    for (const auto& kv : data_) m = std::max(m, std::abs(kv.second));
    return m;
  }

  std::vector<cplx> to_dense(std::size_t n) const {
    std::vector<cplx> d(n);
    for (const auto& [i, c] : data_) d[static_cast<std::size_t>(i)] = c;
    return d;
  }
  static SparseVector from_dense(const std::vector<cplx>& d, const Tolerance& tol) {
    SparseVector v;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!tol.is_zero(d[i])) v.data_[static_cast<Idx>(i)] = d[i];
    }
    return v;
  }

 private:
  map_type data_;
};

using Vec = SparseVector<int>;
using TensorVec = SparseVector<std::int64_t>;

// max_i |a_i - b_i| over the union of supports.
template <class Idx>
double max_abs_diff(const SparseVector<Idx>& a, const SparseVector<Idx>& b) {
  SparseVector<Idx> d = a;
  d -= b;
  return d.max_abs();
}

// Subspace of C^n stored as RREF rows. Pivots are chosen by largest modulus
// with ties broken by lowest index, so the basis is a deterministic function
// of the insertion order.
class Subspace {
 public:
  explicit Subspace(std::size_t universe = 0, Tolerance tol = {})
      : n_(universe), tol_(tol), row_of_pivot_(universe, -1) {}

  static Subspace span(std::size_t universe, const std::vector<Vec>& vectors, Tolerance tol = {});
  static Subspace span_dense(std::size_t universe, const std::vector<std::vector<cplx>>& vectors,
                             Tolerance tol = {});

  std::size_t universe() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const Tolerance& tolerance() const { return tol_; }
  const std::vector<std::vector<cplx>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> basis() const;

  // Returns true if the rank grew.
  bool insert(const Vec& v);
  bool insert_dense(std::vector<cplx> v);

  // v minus its echelon reduction; zero iff v lies in the span.
  std::vector<cplx> reduce(const Vec& v) const;
  std::vector<cplx> reduce_dense(std::vector<cplx> v) const;
  double residual(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains_dense(const std::vector<cplx>& v) const;
  bool contains_all(const std::vector<Vec>& vs) const;
  bool contains(const Subspace& other) const;

  // Treating the rows as homogeneous linear equations, a basis of their
  // common solution space (one vector per free column).
  std::vector<std::vector<cplx>> nullspace() const;

 private:
  void add_reduced(std::vector<cplx> v);
  double threshold(double vnorm) const { return tol_.eps * (1.0 + vnorm); }

  std::size_t n_;
  Tolerance tol_;
  std::vector<std::vector<cplx>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
bool equal(const Subspace& s, const Subspace& t);

// Basis of {c in C^k : sum_i c_i images[i] = 0}. Images are compressed to the
// union of their supports before elimination.
template <class Idx>
std::vector<std::vector<cplx>> kernel_of_images(const std::vector<SparseVector<Idx>>& images,
                                                const Tolerance& tol);

// Solves rows * x = rhs for x in C^n. Rows are added until the system has
// full column rank; the remaining ones only enter the residual.
struct AffineSolution {
  enum class Status { Unique, Inconsistent, Underdetermined };
  Status status = Status::Inconsistent;
  std::vector<cplx> x;
  std::size_t rank = 0;
  double max_residual = 0.0;
};

AffineSolution solve_affine(std::size_t n, const std::vector<Vec>& rows, const std::vector<cplx>& rhs,
                            const Tolerance& tol);

}  // namespace tyw
