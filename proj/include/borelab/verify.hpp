#pragma once

#include <string>
#include <vector>

#include "borelab/minuscule.hpp"

namespace borelab {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerifyOptions {
  int max_length = -1;  // length bound of the alcove sweep; -1 picks one from the rank
  int jobs = 0;
  std::vector<std::string> only;  // check names to run; empty runs all
};

// Everything a check reads: the poset and its families, computed once.
struct VerifyInput {
  const GradedContext& ctx;
  const MinusculePoset& poset;
  FamilyTable families;
  int jobs = 0;

  VerifyInput(const GradedContext& c, const MinusculePoset& p, int j = 0)
      : ctx(c), poset(p), families(ideal_families(c, p)), jobs(j) {}
};

int default_sweep_length(const GradedContext& ctx);

// Every element of length <= max_length: sigma-minuscule iff N(w) misses Phi_sigma.
CheckResult check_dsigma(const GradedContext& ctx, int max_length);

// Every N(w) is biconvex and sigma-minuscule, the poset is closed downward and Hasse edges raise length by one.
CheckResult check_poset_structure(const VerifyInput& in);
CheckResult check_min(const VerifyInput& in);
CheckResult check_lengths(const VerifyInput& in);
CheckResult check_slamu(const VerifyInput& in);
CheckResult check_valfa(const VerifyInput& in);
CheckResult check_orto(const VerifyInput& in);
CheckResult check_basic(const VerifyInput& in);
CheckResult check_minimo(const VerifyInput& in);
CheckResult check_fuori(const VerifyInput& in);
CheckResult check_om(const GradedContext& ctx);
CheckResult check_max(const VerifyInput& in);
CheckResult check_coppie(const VerifyInput& in);
CheckResult check_minimax(const VerifyInput& in);
CheckResult check_parametrization(const VerifyInput& in);
CheckResult check_special_involution(const VerifyInput& in);
CheckResult check_u_element(const VerifyInput& in);
CheckResult check_hr(const GradedContext& ctx);
CheckResult check_fund(const GradedContext& ctx);
CheckResult check_exp_identity(const GradedContext& ctx);
CheckResult check_m2(const GradedContext& ctx);
CheckResult check_hermitian_half(const VerifyInput& in);

// Names in the order verify_all reports them.
const std::vector<std::string>& check_names();
std::vector<CheckResult> verify_all(const GradedContext& ctx, const MinusculePoset& poset, const VerifyOptions& opts = {});

}  // namespace borelab
