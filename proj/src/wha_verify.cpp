#include "tyw/wha_verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "tyw/error.hpp"
#include "tyw/kernels.hpp"

namespace tyw {

namespace {

using Terms = std::vector<std::pair<int, cplx>>;

// Basis-unit products, tabulated when the table is small enough.
class Products {
 public:
  Products(const TYAlgebra& B, bool tabulate) : B_(B), D_(B.dim()) {
    if (!tabulate) return;
    table_.resize(static_cast<std::size_t>(D_) * D_);
    for (int i = 0; i < D_; ++i) {
      for (int j = 0; j < D_; ++j) B.multiply_units(i, j, table_[static_cast<std::size_t>(i) * D_ + j]);
    }
  }

  const Terms& get(int i, int j) {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * D_ + j];
    B_.multiply_units(i, j, scratch_);
    return scratch_;
  }

 private:
  const TYAlgebra& B_;
  int D_;
  std::vector<Terms> table_;
  Terms scratch_;
};

// Dense accumulator over the basis with a touched list, so repeated
// comparisons of short vectors stay cheap.
class Acc {
 public:
  explicit Acc(int n) : v_(n), flag_(n, 0) {}
  void add(int k, cplx c) {
    if (!flag_[k]) {
      flag_[k] = 1;
      touched_.push_back(k);
    }
    v_[k] += c;
  }
  double take_max() {
    double m = 0.0;
    for (int k : touched_) {
      m = std::max(m, std::abs(v_[k]));
      v_[k] = 0.0;
      flag_[k] = 0;
    }
    touched_.clear();
    return m;
  }

 private:
  std::vector<cplx> v_;
  std::vector<char> flag_;
  std::vector<int> touched_;
};

class Tracker {
 public:
  Tracker(std::string name, bool sampled) {
    c_.name = std::move(name);
    c_.sampled = sampled;
  }
  template <class F>
  void update(double r, F&& witness) {
    ++c_.cases;
    if (c_.witness.empty() || r > c_.max_residual) {
      c_.max_residual = std::max(c_.max_residual, r);
      c_.witness = witness();
    }
  }
  AxiomCheck finish(double eps) {
    c_.passed = c_.max_residual <= eps;
    return c_;
  }

 private:
  AxiomCheck c_;
};

std::int64_t t3(std::int64_t D, int p, int q, int r) { return (static_cast<std::int64_t>(p) * D + q) * D + r; }

// Iterate over all pairs, or over `samples` random ones.
template <class F>
void for_pairs(int D, bool full, std::size_t samples, std::mt19937_64& rng, F&& f) {
  if (full) {
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j) f(i, j);
    }
    return;
  }
  std::uniform_int_distribution<int> pick(0, D - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const int i = pick(rng);
    const int j = pick(rng);
    f(i, j);
  }
}

}  // namespace

bool WhaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& WhaReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw ArgumentError("no check named " + name);
}

WhaReport verify_wha_axioms(const TYAlgebra& B, const VerifyOptions& opts) {
  const int D = B.dim();
  const double eps = B.tolerance().eps;
  const bool full = B.n() <= opts.full_coverage_max_order;
  const bool tabulate = static_cast<std::int64_t>(D) * D <= 4'000'000;
  Products prod(B, tabulate);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> pick(0, D - 1);
  WhaReport rep;
  rep.eps = eps;
  rep.dim = D;
  auto lbl = [&](int i) { return B.unit_label(i); };

  // ---- algebra
  {
    Tracker t("associativity", !full);
    Acc acc(D);
    auto triple = [&](int i, int j, int k) {
      const Terms p = prod.get(i, j);
      for (const auto& [s, c] : p) {
        for (const auto& [r, d] : prod.get(s, k)) acc.add(r, c * d);
      }
      const Terms q = prod.get(j, k);
      for (const auto& [s, c] : q) {
        for (const auto& [r, d] : prod.get(i, s)) acc.add(r, -c * d);
      }
      t.update(acc.take_max(), [&] { return lbl(i) + " " + lbl(j) + " " + lbl(k); });
    };
    if (full) {
      for (int i = 0; i < D; ++i) {
        for (int j = 0; j < D; ++j) {
          for (int k = 0; k < D; ++k) triple(i, j, k);
        }
      }
    } else {
      for (std::size_t s = 0; s < opts.samples; ++s) {
        const int i = pick(rng), j = pick(rng), k = pick(rng);
        triple(i, j, k);
      }
    }
    rep.checks.push_back(t.finish(eps));
  }
  const Vec one = B.unit();
  {
    Tracker t("unit", false);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      const double r = std::max(max_abs_diff(B.multiply(one, e), e), max_abs_diff(B.multiply(e, one), e));
      t.update(r, [&] { return lbl(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("star involutive anti-automorphism", !full);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      t.update(max_abs_diff(B.star(B.star(e)), e), [&] { return lbl(i); });
    }
    for_pairs(D, full, opts.samples, rng, [&](int i, int j) {
      const Vec l = B.star(B.multiply(B.basis(i), B.basis(j)));
      const Vec r = B.multiply(B.star(B.basis(j)), B.star(B.basis(i)));
      t.update(max_abs_diff(l, r), [&] { return lbl(i) + " " + lbl(j); });
    });
    rep.checks.push_back(t.finish(eps));
  }

  // ---- coalgebra
  {
    Tracker t("coassociativity", false);
    for (int i = 0; i < D; ++i) {
      const TensorVec d = B.coproduct(B.basis(i));
      TensorVec l, r;
      for (const auto& [k, c] : d.data()) {
        const auto [p, q] = B.tsplit(k);
        for (const auto& [k2, c2] : B.coproduct(B.basis(p)).data()) {
          const auto [p1, p2] = B.tsplit(k2);
          l.add(t3(D, p1, p2, q), c * c2);
        }
        for (const auto& [k2, c2] : B.coproduct(B.basis(q)).data()) {
          const auto [q1, q2] = B.tsplit(k2);
          r.add(t3(D, p, q1, q2), c * c2);
        }
      }
      t.update(max_abs_diff(l, r), [&] { return lbl(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("counit", false);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      Vec l, r;
      for (const auto& [k, c] : B.coproduct(e).data()) {
        const auto [p, q] = B.tsplit(k);
        l.axpy(c * B.counit(B.basis(p)), B.basis(q));
        r.axpy(c * B.counit(B.basis(q)), B.basis(p));
      }
      t.update(std::max(max_abs_diff(l, e), max_abs_diff(r, e)), [&] { return lbl(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("coproduct multiplicative", !full);
    for_pairs(D, full, opts.samples, rng, [&](int i, int j) {
      const Vec ei = B.basis(i), ej = B.basis(j);
      const TensorVec l = B.coproduct(B.multiply(ei, ej));
      const TensorVec r = B.tensor_multiply(B.coproduct(ei), B.coproduct(ej));
      t.update(max_abs_diff(l, r), [&] { return lbl(i) + " " + lbl(j); });
    });
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("coproduct star-preserving", false);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      t.update(max_abs_diff(B.coproduct(B.star(e)), B.tensor_star(B.coproduct(e))), [&] { return lbl(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }

  // ---- weak unit: (Δ(1)⊗1)(1⊗Δ(1)) = (Δ⊗id)Δ(1) = (1⊗Δ(1))(Δ(1)⊗1)
  {
    Tracker t("weak unit", false);
    const auto& d1 = B.delta_one();
    TensorVec l1, l2, r;
    for (const auto& [a, c] : d1) {
      for (const auto& [d, f] : d1) {
        for (const auto& [k, ck] : prod.get(c, d)) l1.add(t3(D, a, k, f), ck);
        for (const auto& [k, ck] : prod.get(d, c)) l2.add(t3(D, a, k, f), ck);
      }
    }
    for (const auto& [k, c] : d1) {
      for (const auto& [kk, cc] : B.coproduct(B.basis(k)).data()) {
        const auto [p, q] = B.tsplit(kk);
        r.add(t3(D, p, q, c), cc);
      }
    }
    t.update(std::max(max_abs_diff(l1, r), max_abs_diff(l2, r)), [] { return std::string("Delta(1)"); });
    rep.checks.push_back(t.finish(eps));
  }

  // ---- weak counit: ε(b c1) ε(c2 d) = ε(bcd) = ε(b c2) ε(c1 d)
  {
    Tracker t("weak counit", !full);
    if (full) {
      std::vector<cplx> E(static_cast<std::size_t>(D) * D);
      for (int b = 0; b < D; ++b) {
        for (int c = 0; c < D; ++c) {
          cplx s = 0.0;
          for (const auto& [k, ck] : prod.get(b, c)) {
            const auto u = B.unit_at(k);
            if (u.row == u.col) s += ck;
          }
          E[static_cast<std::size_t>(b) * D + c] = s;
        }
      }
      auto row = [&](int i) { return E.data() + static_cast<std::size_t>(i) * D; };
      std::vector<cplx> L1(D), L2(D), R(D);
      for (int b = 0; b < D; ++b) {
        for (int c = 0; c < D; ++c) {
          std::fill(L1.begin(), L1.end(), cplx{});
          std::fill(L2.begin(), L2.end(), cplx{});
          std::fill(R.begin(), R.end(), cplx{});
          const auto u = B.unit_at(c);
          for (int k = 0; k < B.hdim(u.x); ++k) {
            const int c1 = B.unit_index(u.x, u.row, k), c2 = B.unit_index(u.x, k, u.col);
            const cplx e1 = row(b)[c1], e2 = row(b)[c2];
            if (e1 != cplx{}) kernels::axpy(L1.data(), e1, row(c2), D);
            if (e2 != cplx{}) kernels::axpy(L2.data(), e2, row(c1), D);
          }
          for (const auto& [k, ck] : prod.get(b, c)) kernels::axpy(R.data(), ck, row(k), D);
          const double r = std::max(kernels::max_abs_diff(L1.data(), R.data(), D),
                                    kernels::max_abs_diff(L2.data(), R.data(), D));
          t.update(r, [&] { return lbl(b) + " " + lbl(c) + " *"; });
        }
      }
    } else {
      auto eps_of = [&](const Vec& v) { return B.counit(v); };
      for (std::size_t s = 0; s < opts.samples; ++s) {
        const int b = pick(rng), c = pick(rng), d = pick(rng);
        const Vec eb = B.basis(b), ed = B.basis(d);
        cplx l1 = 0.0, l2 = 0.0;
        for (const auto& [k, ck] : B.coproduct(B.basis(c)).data()) {
          const auto [p, q] = B.tsplit(k);
          l1 += ck * eps_of(B.multiply(eb, B.basis(p))) * eps_of(B.multiply(B.basis(q), ed));
          l2 += ck * eps_of(B.multiply(eb, B.basis(q))) * eps_of(B.multiply(B.basis(p), ed));
        }
        const cplx r = eps_of(B.multiply(B.multiply(eb, B.basis(c)), ed));
        t.update(std::max(std::abs(l1 - r), std::abs(l2 - r)), [&] { return lbl(b) + " " + lbl(c) + " " + lbl(d); });
      }
    }
    rep.checks.push_back(t.finish(eps));
  }

  // ---- antipode
  {
    Tracker tt("antipode target identity", false), ts("antipode source identity", false),
        tw("antipode S(b1) b2 S(b3) = S(b)", false);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      const TensorVec d = B.coproduct(e);
      Vec l, r;
      for (const auto& [k, c] : d.data()) {
        const auto [p, q] = B.tsplit(k);
        l.axpy(c, B.multiply(B.basis(p), B.antipode(B.basis(q))));
        r.axpy(c, B.multiply(B.antipode(B.basis(p)), B.basis(q)));
      }
      tt.update(max_abs_diff(l, B.eps_t(e)), [&] { return lbl(i); });
      ts.update(max_abs_diff(r, B.eps_s(e)), [&] { return lbl(i); });
      Vec w;
      const auto u = B.unit_at(i);
      for (int k = 0; k < B.hdim(u.x); ++k) {
        for (int l2 = 0; l2 < B.hdim(u.x); ++l2) {
          const Vec s1 = B.antipode(B.basis(B.unit_index(u.x, u.row, k)));
          const Vec s3 = B.antipode(B.basis(B.unit_index(u.x, l2, u.col)));
          w += B.multiply(B.multiply(s1, B.basis(B.unit_index(u.x, k, l2))), s3);
        }
      }
      tw.update(max_abs_diff(w, B.antipode(e)), [&] { return lbl(i); });
    }
    rep.checks.push_back(tt.finish(eps));
    rep.checks.push_back(ts.finish(eps));
    rep.checks.push_back(tw.finish(eps));
  }
  {
    Tracker t("antipode anti-algebra", !full);
    for_pairs(D, full, opts.samples, rng, [&](int i, int j) {
      const Vec l = B.antipode(B.multiply(B.basis(i), B.basis(j)));
      const Vec r = B.multiply(B.antipode(B.basis(j)), B.antipode(B.basis(i)));
      t.update(max_abs_diff(l, r), [&] { return lbl(i) + " " + lbl(j); });
    });
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("antipode anti-coalgebra", false);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      const TensorVec l = B.coproduct(B.antipode(e));
      TensorVec r;
      for (const auto& [k, c] : B.coproduct(e).data()) {
        const auto [p, q] = B.tsplit(k);
        r += c * B.tensor(B.antipode(B.basis(q)), B.antipode(B.basis(p)));
      }
      t.update(max_abs_diff(l, r), [&] { return lbl(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("(S o *)^2 = id", false);
    for (int i = 0; i < D; ++i) {
      const Vec e = B.basis(i);
      const Vec v = B.antipode(B.star(B.antipode(B.star(e))));
      t.update(max_abs_diff(v, e), [&] { return lbl(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }

  // ---- counital subalgebras
  const auto [bt, bs] = B.counital_subalgebras();
  rep.dim_bt = static_cast<int>(bt.dim());
  rep.dim_bs = static_cast<int>(bs.dim());
  rep.dim_bt_cap_bs = static_cast<int>(intersect(bt, bs).dim());
  {
    Tracker t("S^2 = id on B_t", false);
    const auto basis = bt.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      t.update(max_abs_diff(B.antipode(B.antipode(basis[i])), basis[i]), [&] { return "B_t basis " + std::to_string(i); });
    }
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("B_t and B_s commute", false);
    const auto tb = bt.basis(), sb = bs.basis();
    for (std::size_t i = 0; i < tb.size(); ++i) {
      for (std::size_t j = 0; j < sb.size(); ++j) {
        t.update(max_abs_diff(B.multiply(tb[i], sb[j]), B.multiply(sb[j], tb[i])),
                 [&] { return "B_t " + std::to_string(i) + ", B_s " + std::to_string(j); });
      }
    }
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("biconnected: dim(B_t cap B_s) = 1", false);
    t.update(std::abs(rep.dim_bt_cap_bs - 1.0), [&] { return "dim " + std::to_string(rep.dim_bt_cap_bs); });
    rep.checks.push_back(t.finish(eps));
  }
  {
    Tracker t("H^0 orthogonal self-adjoint projections", false);
    for (int x = 0; x <= B.n(); ++x) {
      const HVector vx = B.h_basis(0, x);
      t.update(max_abs_diff(B.h_sharp(vx), vx), [&] { return "v^0_" + B.h_label(0, x); });
      for (int y = 0; y <= B.n(); ++y) {
        const HVector expect = x == y ? vx : HVector();
        t.update(max_abs_diff(B.h_circ(vx, B.h_basis(0, y)), expect),
                 [&] { return "v^0_" + B.h_label(0, x) + " v^0_" + B.h_label(0, y); });
      }
    }
    rep.checks.push_back(t.finish(eps));
  }
  if (opts.compute_center) {
    rep.dim_center = static_cast<int>(B.center().dim());
    Tracker t("C*-blocks: dim Z(B) = |Omega|", false);
    t.update(std::abs(rep.dim_center - static_cast<double>(B.omega_size())),
             [&] { return "dim " + std::to_string(rep.dim_center); });
    rep.checks.push_back(t.finish(eps));
  }
  return rep;
}

std::string format_report(const WhaReport& r) {
  std::string out;
  char buf[256];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%-4s %-44s cases=%-9zu max_residual=%.3e%s\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.cases, c.max_residual, c.sampled ? " (sampled)" : "");
    out += buf;
    if (!c.passed) out += "     witness: " + c.witness + "\n";
  }
  std::snprintf(buf, sizeof buf, "dim B = %d, dim B_t = %d, dim B_s = %d, dim(B_t cap B_s) = %d", r.dim, r.dim_bt, r.dim_bs,
                r.dim_bt_cap_bs);
  out += buf;
  if (r.dim_center >= 0) out += ", dim Z(B) = " + std::to_string(r.dim_center);
  out += "\n";
  return out;
}

}  // namespace tyw
