// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [path-to-tywha]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "../support.hpp"
#include "tyw/classify.hpp"
#include "tyw/coideals.hpp"
#include "tyw/error.hpp"
#include "tyw/wha_verify.hpp"

using namespace tyw;

namespace {

constexpr double kEps = 1e-9;
constexpr double kSecondsPerCase = 60.0;
constexpr int kPositivitySamples = 200;

const char* const kAxiomGroups[] = {"1", "2", "3", "4", "2,2"};
const char* const kCoidealGroups[] = {"2", "3", "4", "2,2"};

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

Outcome axioms() {
  Outcome o;
  double worst = 0, slowest = 0;
  for (auto g : kAxiomGroups) {
    for (int t : {1, -1}) {
      const auto t0 = std::chrono::steady_clock::now();
      auto r = verify_wha_axioms(test::make(g, t));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      slowest = std::max(slowest, secs);
      for (const auto& c : r.checks) {
        worst = std::max(worst, c.max_residual);
        if (!c.passed || c.max_residual > kEps) o.fail(std::string(g) + " " + c.name);
        if (c.sampled) o.fail(std::string(g) + " " + c.name + " was sampled");
      }
      if (secs > kSecondsPerCase) o.fail(std::string(g) + " took " + fmt(secs) + " s");
    }
  }
  if (o.ok) o.detail = "10 cases, full coverage, max residual " + fmt(worst) + ", slowest " + fmt(slowest) + " s";
  return o;
}

Outcome dimensions() {
  Outcome o;
  if (test::make("2").dim() != 34) o.fail("dim B(Z2) != 34");
  if (test::make("4").dim() != 164) o.fail("dim B(Z4) != 164");
  for (auto g : kAxiomGroups) {
    for (int t : {1, -1}) {
      auto B = test::make(g, t);
      const int n = B.n();
      auto [Bt, Bs] = B.counital_subalgebras();
      if (B.dim() != n * (n + 1) * (n + 1) + 4 * n * n) o.fail(std::string(g) + " dim B");
      if (static_cast<int>(Bt.dim()) != n + 1 || static_cast<int>(Bs.dim()) != n + 1) o.fail(std::string(g) + " dim B_t/B_s");
      if (intersect(Bt, Bs).dim() != 1) o.fail(std::string(g) + " dim(B_t cap B_s)");
      if (static_cast<int>(B.center().dim()) != n + 1) o.fail(std::string(g) + " dim Z(B)");
    }
  }
  if (o.ok) o.detail = "dim B = n(n+1)^2+4n^2, B_t = B_s = n+1, cap 1, Z = n+1";
  return o;
}

Outcome corepresentations() {
  Outcome o;
  double worst = 0;
  int count = 0;
  for (auto g : kAxiomGroups) {
    for (int t : {1, -1}) {
      auto B = test::make(g, t);
      for (int x = 0; x < B.omega_size(); ++x, ++count) {
        auto r = B.verify_corepresentation(x);
        worst = std::max({worst, r.coproduct_residual, r.counit_residual});
        if (r.coproduct_residual > kEps || r.counit_residual > kEps) o.fail(std::string(g) + " x=" + B.omega_label(x));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " corepresentations, max residual " + fmt(worst);
  return o;
}

Outcome haar() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> d;
  double worst_s = 0, min_pos = 1e300;
  for (auto g : kAxiomGroups) {
    for (int t : {1, -1}) {
      auto B = test::make(g, t);
      TYAlgebra::HaarResult h;
      try {
        h = B.haar();
      } catch (const Error& e) {
        o.fail(std::string(g) + ": " + e.what());
        continue;
      }
      if (h.max_residual > kEps) o.fail(std::string(g) + " haar residual " + fmt(h.max_residual));
      for (int i = 0; i < B.dim(); ++i) {
        const double r = std::abs(B.apply(h.h, B.antipode(B.basis(i))) - h.h[i]);
        worst_s = std::max(worst_s, r);
        if (r > kEps) o.fail(std::string(g) + " h o S != h at " + B.unit_label(i));
      }
      for (int k = 0; k < kPositivitySamples; ++k) {
        Vec b;
        for (int i = 0; i < B.dim(); ++i) b.add(i, {d(rng), d(rng)});
        const cplx v = B.apply(h.h, B.multiply(B.star(b), b));
        min_pos = std::min(min_pos, v.real());
        if (v.real() < -kEps || std::abs(v.imag()) > kEps * (1 + std::abs(v))) o.fail(std::string(g) + " h(b*b) not >= 0");
      }
    }
  }
  if (o.ok) o.detail = "unique in all 10 cases, max |h(S b) - h(b)| " + fmt(worst_s) + ", min h(b*b) " + fmt(min_pos);
  return o;
}

Outcome coideals() {
  Outcome o;
  int built = 0;
  auto check = [&](const TYAlgebra& B, const WeakCoideal& A, bool expect_coideal, const std::string& what) {
    ++built;
    if (!verify_weak_coideal(B, A).passed()) o.fail(what + " failed verification");
    if (is_coideal(B, A) != expect_coideal) o.fail(what + " coideal flag");
    if (!is_indecomposable(B, A)) o.fail(what + " decomposable");
    const auto dims = A.dims();
    if (dims.at(B.m()) % 2 != 0) o.fail(what + " odd dim X^m");
    if (A.spec && spectral_dims(B.data().chi, *A.spec) != dims) o.fail(what + " spectral dims");
  };
  for (auto g : kCoidealGroups) {
    auto B = test::make(g);
    const auto& G = B.group();
    for (const auto& K : enumerate_subgroups(G)) {
      const auto Kp = orthogonal(B.data().chi, K);
      const QuotientGroup q(G, K), qp(G, Kp);
      const std::string tag = std::string(g) + " K=" + K.format(G);
      for (const auto& Z : nonempty_subsets(q.size())) {
        check(B, build_no_m(B, K, Z, 0), false, tag + " no_m");
        for (int r = 0; r < qp.size(); ++r)
          check(B, build_with_m(B, K, Z, r), static_cast<int>(Z.size()) == q.size(), tag + " with_m");
      }
      for (const auto& Z : nonempty_subsets(qp.size())) check(B, build_no_m(B, K, Z, 1), false, tag + " no_m perp");
      check(B, build_I_m_K(B, K), false, tag + " I_m_K");
      check(B, build_I_Omega_K(B, K), true, tag + " I_Omega_K");
    }
  }
  if (o.ok) o.detail = std::to_string(built) + " builder outputs verified";
  return o;
}

Outcome classification() {
  Outcome o;
  auto std_chi = [](const char* g) { return Bicharacter::standard(FiniteAbelianGroup::parse(g)); };
  auto z2 = weak_coideal_classes(std_chi("2"));
  if (z2.total() != 10 || z2.coideal_total() != 8) o.fail("Z2 counts " + std::to_string(z2.total()) + "/" + std::to_string(z2.coideal_total()));
  auto z1 = weak_coideal_classes(std_chi("1"));
  if (z1.total() != 2 || z1.coideal_total() != 2) o.fail("trivial group counts");
  const auto oracle = test::load_json("orbit_counts.json");
  int ks = 0;
  for (const char* g : {"1", "2", "3", "4", "5", "6", "8", "9", "2,2", "2,4"}) {
    auto r = weak_coideal_classes(std_chi(g));
    const auto& want = oracle.at(g)["per_k"];
    if (!r.burnside_ok()) o.fail(std::string(g) + " Burnside mismatch");
    if (r.per_k.size() != want.size()) {
      o.fail(std::string(g) + " subgroup count");
      continue;
    }
    for (std::size_t i = 0; i < r.per_k.size(); ++i, ++ks) {
      const auto& k = r.per_k[i];
      std::size_t flagged = 0;
      for (const auto& rep : k.orbits) flagged += rep.coideal_flag;
      if (flagged != (k.K == k.K_perp ? 2u : 4u)) o.fail(std::string(g) + " coideal orbit count");
      if (k.orbits.size() != want[i]["weak"].get<std::size_t>() || flagged != want[i]["coideal"].get<std::size_t>())
        o.fail(std::string(g) + " disagrees with exhaustive enumeration");
    }
  }
  auto z4 = weak_coideal_classes(std_chi("4"));
  bool flip = false;
  for (const auto& k : z4.per_k)
    if (k.K.elements() == std::vector<int>{0, 2}) flip = k.action == "translations+flip";
  if (!flip) o.fail("Z4 K={0,2} has no flip");
  if (o.ok) o.detail = "Z2 10/8, {0} 2/2, " + std::to_string(ks) + " subgroups with 4|2 coideal orbits, Z4 {0,2} flipped";
  return o;
}

Outcome faults() {
  Outcome o;
  Faults tf;
  tf.flip_tau_in_sharp = true;
  for (const char* g : {"2", "3", "4"})
    for (int t : {1, -1})
      if (verify_wha_axioms(test::make(g, t, tf)).all_passed()) o.fail(std::string("tau fault missed on ") + g);
  BuildFaults bf;
  bf.drop_vgm = true;
  for (auto g : kCoidealGroups) {
    auto B = test::make(g);
    for (const auto& K : enumerate_subgroups(B.group())) {
      const QuotientGroup q(B.group(), K);
      std::vector<int> all(q.size());
      for (int i = 0; i < q.size(); ++i) all[i] = i;
      if (verify_weak_coideal(B, build_with_m(B, K, all, 0, bf)).passed())
        o.fail(std::string("drop_vgm missed on ") + g + " K=" + K.format(B.group()));
    }
  }
  ClassifyOptions co;
  co.drop_flip = true;
  for (const char* g : {"1", "4", "9"}) {
    try {
      weak_coideal_classes(Bicharacter::standard(FiniteAbelianGroup::parse(g)), co);
      o.fail(std::string("drop_flip missed on ") + g);
    } catch (const StructuralError&) {
    }
  }
  if (o.ok) o.detail = "tau-in-sharp, dropped v^g_m and dropped flip all detected";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism(const std::string& exe) {
  Outcome o;
  if (exe.empty()) {
    o.fail("no tywha binary given");
    return o;
  }
  const auto dir = std::filesystem::temp_directory_path();
  const std::string pid = std::to_string(::getpid());
  int runs = 0;
  for (const char* g : {"2", "4", "2,2", "6"}) {
    for (const char* sub : {"weak-coideals", "g-algebras"}) {
      std::string files[2];
      for (int k = 0; k < 2; ++k) {
        const auto p = dir / ("tywha_accept_" + pid + "_" + std::to_string(k) + ".json");
        const std::string cmd = "\"" + exe + "\" --group " + g + " --json " + p.string() + " classify " + sub +
                                " > /dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0) o.fail(cmd + " failed");
        files[k] = slurp(p);
        std::filesystem::remove(p);
      }
      ++runs;
      if (files[0].empty() || files[0] != files[1]) o.fail(std::string("classify ") + sub + " on " + g + " differs");
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " pairs of classify --json runs byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"WHA axioms", axioms},
      {"dimensions", dimensions},
      {"corepresentations", corepresentations},
      {"Haar functional", haar},
      {"coideal builders", coideals},
      {"classification counts", classification},
      {"fault injection", faults},
      {"determinism", [&] { return determinism(exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
