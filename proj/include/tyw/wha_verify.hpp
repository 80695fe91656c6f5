#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tyw/ty_wha.hpp"

namespace tyw {

struct AxiomCheck {
  std::string name;
  std::size_t cases = 0;
  double max_residual = 0.0;
  std::string witness;  // basis units attaining max_residual
  bool sampled = false;
  bool passed = false;
};

struct WhaReport {
  double eps = 0.0;
  std::vector<AxiomCheck> checks;
  int dim = 0;
  int dim_bt = 0;
  int dim_bs = 0;
  int dim_bt_cap_bs = 0;
  int dim_center = -1;  // -1 when skipped

  bool all_passed() const;
  const AxiomCheck& check(const std::string& name) const;
};

struct VerifyOptions {
  // Groups up to this order get every basis pair and triple; larger ones
  // get `samples` random basis pairs/triples per check.
  int full_coverage_max_order = 4;
  std::size_t samples = 10000;
  std::uint64_t seed = 0x7e57;
  bool compute_center = true;
};

WhaReport verify_wha_axioms(const TYAlgebra& B, const VerifyOptions& opts = {});

// Fixed-width text table, one line per check.
std::string format_report(const WhaReport& r);

}  // namespace tyw
