#pragma once

#include <string>
#include <vector>

#include "mstack/ring.hpp"

namespace mstack {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// One entry per acceptance criterion, in order, each aggregating its grid.
std::vector<CheckResult> run_acceptance_criteria();

// Finer-grained suites used by CLI verification.
std::vector<CheckResult> check_p1_trace_closed_form();     // 1
std::vector<CheckResult> check_lefschetz_rank2();          // 2
std::vector<CheckResult> check_lefschetz_rank34();         // 3
std::vector<CheckResult> check_divergence_boundary();      // 4
std::vector<CheckResult> check_trace_oracle();             // 5
std::vector<CheckResult> check_recursion_genus0();         // 6
std::vector<CheckResult> check_atiyah_genus1();            // 7
std::vector<CheckResult> check_newstead_genus2();          // 8
std::vector<CheckResult> check_generator_consistency();    // 9
std::vector<CheckResult> check_grassmann_factorization();  // 10
std::vector<CheckResult> check_fixed_point_mismatch();     // 11
std::vector<CheckResult> check_recursion_identity();       // stratification self-consistency

// Convention adjudication: compares each closed-form reading against the
// recursion-side fixed-determinant total over a (genus, rank) grid and counts
// the conventions that survive everywhere.
struct AdjudicationCell {
    int genus;
    int rank;
    bool match[3];  // indexed by Convention order: as-printed, sign-fixed, sl-strict
};

struct AdjudicationReport {
    std::vector<AdjudicationCell> cells;
    std::vector<Convention> survivors;
    bool newstead_pass = false;  // the genus-2 coarse-series corroboration
};

AdjudicationReport convention_adjudication();
std::vector<CheckResult> check_convention_adjudication();  // 12

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace mstack
