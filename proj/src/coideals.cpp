#include "tyw/coideals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "tyw/error.hpp"

namespace tyw {

namespace {

std::vector<int> normalize_cosets(const std::vector<int>& z, int count, const char* what) {
  std::vector<int> out = z;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int c : out) {
    if (c < 0 || c >= count) throw ArgumentError(std::string(what) + ": coset index out of range");
  }
  return out;
}

bool in(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// v^0_S ⊗ vbar^0_Omega for S given as H^0 indices.
Vec unit_from_support(const TYAlgebra& B, const std::vector<int>& support) {
  Vec u;
  for (int a : support) {
    for (int b = 0; b < B.hdim(0); ++b) u.add(B.unit_index(0, a, b), 1.0);
  }
  return u;
}

std::vector<int> union_of(const QuotientGroup& q, const std::vector<int>& z) {
  std::vector<int> l;
  for (int c : z) l.insert(l.end(), q.members(c).begin(), q.members(c).end());
  std::sort(l.begin(), l.end());
  return l;
}

Vec combine(const std::vector<cplx>& coef, const std::vector<Vec>& vs) {
  Vec v;
  for (std::size_t i = 0; i < coef.size(); ++i) {
    if (coef[i] != cplx{}) v.axpy(coef[i], vs[i]);
  }
  return v.prune(Tolerance{0.0});
}

// Elements of `cand` commuting with every generator of A.
std::vector<Vec> commutant_within(const TYAlgebra& B, std::vector<Vec> cand, const std::vector<Vec>& gens) {
  for (std::size_t j = 0; j < gens.size() && !cand.empty(); ++j) {
    std::vector<Vec> images;
    images.reserve(cand.size());
    for (const auto& c : cand) images.push_back(B.multiply(c, gens[j]) - B.multiply(gens[j], c));
    const auto ker = kernel_of_images(images, B.tolerance());
    std::vector<Vec> next;
    next.reserve(ker.size());
    for (const auto& k : ker) next.push_back(combine(k, cand));
    cand = std::move(next);
  }
  return cand;
}

struct Cond {
  Cond(std::string name, double e) : eps(e) { r.name = std::move(name); }
  ConditionResult r;
  double eps;
  void see(double res, const std::string& where) {
    ++r.cases;
    if (res > r.max_residual) {
      r.max_residual = res;
      if (res > eps) r.witness = where;
    }
  }
  ConditionResult done() {
    r.passed = r.passed && r.max_residual <= eps;
    return r;
  }
};

}  // namespace

std::vector<int> WeakCoideal::dims() const {
  std::vector<int> d;
  for (const auto& xs : X) d.push_back(static_cast<int>(xs.size()));
  return d;
}

HVector coset_vector(const TYAlgebra& B, int x, const std::vector<int>& members, bool barred) {
  if (x < 0 || x > B.n()) throw ArgumentError("label out of range");
  if (barred && !B.is_m(x)) throw ArgumentError("barred coset vectors live in H^m");
  HVector v;
  for (int g : members) {
    if (g < 0 || g >= B.n()) throw ArgumentError("coset member out of range");
    const int a = B.is_m(x) ? (barred ? B.bar(g) : B.unb(g)) : g;
    v.add(B.hflat(x, a), 1.0);
  }
  return v;
}

WeakCoideal assemble(const TYAlgebra& B, std::string builder, std::vector<std::vector<HVector>> X, Vec unit) {
  if (static_cast<int>(X.size()) != B.omega_size()) throw ArgumentError("X-family must have one entry per label");
  WeakCoideal w;
  w.builder = std::move(builder);
  w.A = Subspace(static_cast<std::size_t>(B.dim()), B.tolerance());
  w.X.resize(X.size());
  for (int x = 0; x < B.omega_size(); ++x) {
    Subspace seen(static_cast<std::size_t>(B.hsize()), B.tolerance());
    for (auto& u : X[x]) {
      for (const auto& [f, c] : u.data()) {
        if (B.hsplit(f).first != x) throw ArgumentError("X^" + B.omega_label(x) + " vector leaves H^" + B.omega_label(x));
      }
      if (!seen.insert(u)) continue;
      w.X[x].push_back(u);
      for (int y = 0; y < B.hdim(x); ++y) {
        Vec g;
        for (const auto& [f, c] : u.data()) g.add(B.unit_index(x, B.hsplit(f).second, y), c);
        w.generators.push_back(g);
        w.A.insert(g);
      }
    }
  }
  w.unit = std::move(unit);
  return w;
}

WeakCoideal build_no_m(const TYAlgebra& B, const Subgroup& K, const std::vector<int>& Z, int side) {
  if (side != 0 && side != 1) throw ArgumentError("side must be 0 or 1");
  if (Z.empty()) throw ArgumentError("Z must be nonempty");
  const auto& G = B.group();
  const Subgroup Kuse = side == 0 ? K : orthogonal(B.data().chi, K);
  const QuotientGroup q(G, Kuse);
  const auto z = normalize_cosets(Z, q.size(), "Z");

  std::vector<std::vector<HVector>> X(B.omega_size());
  for (int g = 0; g < B.n(); ++g) {
    for (int lam : z) {
      if (in(z, q.translate(G.neg(g), lam))) X[g].push_back(coset_vector(B, g, q.members(lam), false));
    }
  }
  auto w = assemble(B, "no_m", std::move(X), unit_from_support(B, union_of(q, z)));
  w.spec = side == 0 ? CoidealSpec{K, z, {}} : CoidealSpec{K, {}, z};
  return w;
}

WeakCoideal build_with_m(const TYAlgebra& B, const Subgroup& K, const std::vector<int>& Z, int rho0,
                         BuildFaults faults) {
  if (Z.empty()) throw ArgumentError("Z must be nonempty");
  const auto& G = B.group();
  const Subgroup Kp = orthogonal(B.data().chi, K);
  const QuotientGroup q(G, K);
  const QuotientGroup qp(G, Kp);
  const auto z = normalize_cosets(Z, q.size(), "Z");
  if (rho0 < 0 || rho0 >= qp.size()) throw ArgumentError("rho0: coset index out of range");

  int dropped = -1;
  if (faults.drop_vgm) dropped = Kp.elements().back();

  std::vector<std::vector<HVector>> X(B.omega_size());
  for (int g = 0; g < B.n(); ++g) {
    if (Kp.contains(g) && g != dropped) X[g].push_back(B.h_basis(g, B.mvec()));
    for (int lam : z) {
      if (in(z, q.translate(G.neg(g), lam))) X[g].push_back(coset_vector(B, g, q.members(lam), false));
    }
  }
  for (int lam : z) {
    X[B.m()].push_back(coset_vector(B, B.m(), q.members(lam), false));
    X[B.m()].push_back(coset_vector(B, B.m(), q.members(lam), true));
  }
  auto support = union_of(q, z);
  support.push_back(B.mvec());
  auto w = assemble(B, faults.drop_vgm ? "with_m[fault:drop_vgm]" : "with_m", std::move(X),
                    unit_from_support(B, support));
  w.spec = CoidealSpec{K, z, {rho0}};
  w.rho0 = rho0;
  return w;
}

WeakCoideal build_from_pair(const TYAlgebra& B, const Subgroup& K, const std::vector<int>& Z0,
                            const std::vector<int>& Z1, BuildFaults faults) {
  if (Z0.empty() && Z1.empty()) throw ArgumentError("Z0 and Z1 are both empty");
  if (Z0.size() > 1 && Z1.size() > 1) throw ArgumentError("one of Z0, Z1 must have at most one coset");
  const Subgroup Kp = orthogonal(B.data().chi, K);
  const QuotientGroup q1(B.group(), Kp);
  if (Z1.empty()) return build_no_m(B, K, Z0, 0);
  if (Z0.empty()) return build_no_m(B, K, Z1, 1);
  if (Z0.size() == 1 && static_cast<int>(Z1.size()) == q1.size()) return build_with_m(B, Kp, Z1, Z0[0], faults);
  if (Z1.size() == 1) return build_with_m(B, K, Z0, Z1[0], faults);
  return build_with_m(B, Kp, Z1, Z0[0], faults);
}

WeakCoideal build_I_m_K(const TYAlgebra& B, const Subgroup& K) {
  std::vector<std::vector<HVector>> X(B.omega_size());
  for (int k : K.elements()) X[k].push_back(B.h_basis(k, B.mvec()));
  auto w = assemble(B, "I_m_K", std::move(X), unit_from_support(B, {B.mvec()}));
  w.spec = CoidealSpec{K, {0}, {}};
  return w;
}

WeakCoideal build_I_Omega_K(const TYAlgebra& B, const Subgroup& K) {
  std::vector<std::vector<HVector>> X(B.omega_size());
  std::vector<int> all;
  for (int a = 0; a < B.hdim(0); ++a) all.push_back(a);
  for (int k : K.elements()) {
    HVector v;
    for (int a : all) v.add(B.hflat(k, a), 1.0);
    X[k].push_back(v);
  }
  auto w = assemble(B, "I_Omega_K", std::move(X), unit_from_support(B, all));
  w.spec = CoidealSpec{K, {0}, {}};
  return w;
}

bool CoidealReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

CoidealReport verify_weak_coideal(const TYAlgebra& B, const WeakCoideal& A) {
  const double eps = B.tolerance().eps;
  const auto& gens = A.generators;
  CoidealReport rep;

  {
    Cond c("nonzero with unit", eps);
    c.see(A.dim() == 0 ? 1.0 : 0.0, "A = 0");
    c.see(A.unit.max_abs() <= eps ? 1.0 : 0.0, "unit_A = 0");
    c.see(A.A.residual(A.unit), "unit_A not in A");
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("(i) closed under multiply", eps);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Vec p = B.multiply(gens[i], gens[j]);
        if (p.empty()) {
          ++c.r.cases;
          continue;
        }
        c.see(A.A.residual(p), "generators " + std::to_string(i) + "," + std::to_string(j));
      }
    }
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("(ii) closed under star", eps);
    for (std::size_t i = 0; i < gens.size(); ++i) c.see(A.A.residual(B.star(gens[i])), "generator " + std::to_string(i));
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("(iii) coproduct in A (x) B", eps);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::map<int, Vec> slices;  // second leg -> first-leg vector
      for (const auto& [t, v] : B.coproduct(gens[i]).data()) {
        const auto [p, q] = B.tsplit(t);
        slices[q].add(p, v);
      }
      double worst = 0.0;
      for (const auto& [q, s] : slices) worst = std::max(worst, A.A.residual(s));
      c.see(worst, "generator " + std::to_string(i));
    }
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("(iv) unit_A is a unit of A", eps);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const double l = max_abs_diff(B.multiply(A.unit, gens[i]), gens[i]);
      const double r = max_abs_diff(B.multiply(gens[i], A.unit), gens[i]);
      c.see(std::max(l, r), "generator " + std::to_string(i));
    }
    c.see(max_abs_diff(B.star(A.unit), A.unit), "unit_A not self-adjoint");
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("(v) coproduct of unit in A (x) B_t", eps);
    const auto bt = B.counital_subalgebras().first;
    std::map<int, Vec> cols, rows;
    for (const auto& [t, v] : B.coproduct(A.unit).data()) {
      const auto [p, q] = B.tsplit(t);
      cols[q].add(p, v);
      rows[p].add(q, v);
    }
    double left = 0.0, right = 0.0;
    for (const auto& [q, s] : cols) left = std::max(left, A.A.residual(s));
    for (const auto& [p, s] : rows) right = std::max(right, bt.residual(s));
    c.see(left, "first leg outside A");
    c.see(right, "second leg outside B_t");
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("X^0 partition and unit shape", eps);
    try {
      const auto part = x0_partition(B, A);
      c.see(max_abs_diff(A.unit, unit_from_support(B, part.gamma)), "unit_A differs from v^0_Gamma ⊗ vbar^0_Omega");
    } catch (const StructuralError& e) {
      c.see(1.0, e.what());
    }
    rep.conditions.push_back(c.done());
  }
  {
    Cond c("dim X^m even", eps);
    c.see(A.X[B.m()].size() % 2 == 0 ? 0.0 : 1.0, "odd dim X^m");
    rep.conditions.push_back(c.done());
  }
  return rep;
}

bool is_coideal(const TYAlgebra& B, const WeakCoideal& A) {
  return max_abs_diff(A.unit, B.unit()) <= B.tolerance().eps;
}

X0Partition x0_partition(const TYAlgebra& B, const WeakCoideal& A) {
  const int d0 = B.hdim(0);
  const auto& tol = B.tolerance();
  Subspace x0(static_cast<std::size_t>(d0), tol);
  for (const auto& u : A.X[0]) {
    Vec local;
    for (const auto& [f, c] : u.data()) local.add(B.hsplit(f).second, c);
    x0.insert(local);
  }
  // Points in one block share their column of the echelon basis.
  std::vector<std::vector<cplx>> cols(d0, std::vector<cplx>(x0.dim()));
  for (std::size_t r = 0; r < x0.dim(); ++r) {
    for (int p = 0; p < d0; ++p) cols[p][r] = x0.rows()[r][p];
  }
  auto nonzero = [&](const std::vector<cplx>& v) {
    return std::any_of(v.begin(), v.end(), [&](cplx z) { return !tol.is_zero(z); });
  };
  auto same = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!tol.equal(a[i], b[i])) return false;
    }
    return true;
  };
  X0Partition part;
  std::vector<char> used(d0, 0);
  for (int p = 0; p < d0; ++p) {
    if (used[p] || !nonzero(cols[p])) continue;
    std::vector<int> block{p};
    used[p] = 1;
    for (int q = p + 1; q < d0; ++q) {
      if (!used[q] && same(cols[p], cols[q])) {
        block.push_back(q);
        used[q] = 1;
      }
    }
    part.blocks.push_back(block);
  }
  Subspace ind(static_cast<std::size_t>(d0), tol);
  for (const auto& b : part.blocks) {
    Vec v;
    for (int p : b) v.add(p, 1.0);
    ind.insert(v);
  }
  if (!equal(ind, x0)) throw StructuralError("X^0 is not spanned by block indicators");
  for (const auto& b : part.blocks) part.gamma.insert(part.gamma.end(), b.begin(), b.end());
  std::sort(part.gamma.begin(), part.gamma.end());
  part.k0 = static_cast<int>(part.blocks.size());
  return part;
}

Subspace center(const TYAlgebra& B, const WeakCoideal& A) {
  return Subspace::span(static_cast<std::size_t>(B.dim()), commutant_within(B, A.generators, A.generators),
                        B.tolerance());
}

namespace {
std::vector<Vec> fixed_point_basis(const TYAlgebra& B, const WeakCoideal& A) {
  const TensorVec d1 = B.coproduct(A.unit);
  const Vec one = B.unit();
  std::vector<TensorVec> images;
  images.reserve(A.generators.size());
  for (const auto& a : A.generators) {
    TensorVec im = B.coproduct(a);
    im -= B.tensor_multiply(d1, B.tensor(a, one));
    images.push_back(im.prune(B.tolerance()));
  }
  std::vector<Vec> out;
  for (const auto& k : kernel_of_images(images, B.tolerance())) out.push_back(combine(k, A.generators));
  return out;
}
}  // namespace

Subspace fixed_point_algebra(const TYAlgebra& B, const WeakCoideal& A) {
  return Subspace::span(static_cast<std::size_t>(B.dim()), fixed_point_basis(B, A), B.tolerance());
}

int center_fixed_dim(const TYAlgebra& B, const WeakCoideal& A) {
  const auto zf = commutant_within(B, fixed_point_basis(B, A), A.generators);
  return static_cast<int>(Subspace::span(static_cast<std::size_t>(B.dim()), zf, B.tolerance()).dim());
}

bool is_indecomposable(const TYAlgebra& B, const WeakCoideal& A) { return center_fixed_dim(B, A) == 1; }

std::vector<int> spectral_dims_type_d(const FiniteAbelianGroup& G, const QuotientGroup& q0, const QuotientGroup& q1,
                                      const std::vector<int>& m0, const std::vector<int>& m1) {
  if (static_cast<int>(m0.size()) != q0.size() || static_cast<int>(m1.size()) != q1.size()) {
    throw ArgumentError("multiplicity vector length does not match the quotient");
  }
  const int n = G.order();
  std::vector<int> d(n + 1, 0);
  for (int g = 0; g < n; ++g) {
    for (int l = 0; l < q0.size(); ++l) d[g] += m0[l] * m0[q0.translate(g, l)];
    for (int l = 0; l < q1.size(); ++l) d[g] += m1[l] * m1[q1.translate(g, l)];
  }
  int s0 = 0, s1 = 0;
  for (int v : m0) s0 += v;
  for (int v : m1) s1 += v;
  d[n] = 2 * s0 * s1;
  return d;
}

std::vector<int> spectral_dims_type_i(const FiniteAbelianGroup& G, const QuotientGroup& q, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != q.size()) throw ArgumentError("multiplicity vector length does not match the quotient");
  const int n = G.order();
  std::vector<int> d(n + 1, 0);
  int s = 0;
  for (int g = 0; g < n; ++g) {
    for (int l = 0; l < q.size(); ++l) d[g] += m[l] * m[q.translate(g, l)];
  }
  for (int v : m) s += v;
  d[n] = s * s;
  return d;
}

std::vector<int> spectral_dims(const Bicharacter& chi, const CoidealSpec& spec) {
  const auto& G = chi.group();
  const QuotientGroup q0(G, spec.K);
  const QuotientGroup q1(G, orthogonal(chi, spec.K));
  std::vector<int> m0(q0.size(), 0), m1(q1.size(), 0);
  for (int c : normalize_cosets(spec.Z0, q0.size(), "Z0")) m0[c] = 1;
  for (int c : normalize_cosets(spec.Z1, q1.size(), "Z1")) m1[c] = 1;
  return spectral_dims_type_d(G, q0, q1, m0, m1);
}

std::vector<int> cosets_from_reps(const FiniteAbelianGroup& G, const QuotientGroup& q, const std::vector<int>& reps) {
  std::set<int> cs;
  for (int r : reps) {
    if (r < 0 || r >= G.order()) throw ArgumentError("coset representative out of range");
    cs.insert(q.coset_of(r));
  }
  return {cs.begin(), cs.end()};
}

}  // namespace tyw
