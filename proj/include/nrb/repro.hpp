#pragma once

#include <string>
#include <vector>

namespace nrb {

/// Absolute tolerance for reproducing printed constants, which are rounded to
/// four-to-six significant figures in the source material.
inline constexpr double kReproTolerance = 5e-3;

enum class ReproRelation {
    Approx,           // |computed - expected| <= tolerance
    StrictlyGreater,  // computed > expected, strictly
};

struct ReproCheck {
    std::string quantity;
    double computed = 0.0;
    double expected = 0.0;  // the printed constant, or the computed right side
    ReproRelation relation = ReproRelation::Approx;
    double tolerance = kReproTolerance;
    bool passed = false;
};

struct ReproCaseResult {
    std::string id;
    std::string citation;
    std::vector<ReproCheck> checks;
    bool passed = false;  // all checks passed
};

/// Evaluates every embedded reference case and reports computed-vs-expected
/// values with their citations. Inputs are embedded; no files are read.
std::vector<ReproCaseResult> run_repro();

}  // namespace nrb
