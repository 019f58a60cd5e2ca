#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logcoef/classes.hpp"

namespace logcoef {

/// Deterministic random member of a class: trial i of a seeded run always
/// produces the same measure regardless of scheduling. In real mode the
/// sampled atoms are conjugate-symmetric so every c_n is real.
CtcFunction sample_member(const ClassSpec& cls, std::uint64_t seed, std::uint64_t trial,
                          bool real_mode, int order = 16);

struct Violation {
    std::uint64_t trial;
    std::string bound;
    double achieved;
    double limit;
};

struct VerifyReport {
    ClassId class_id;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    double worst_gamma1_ratio = 0.0;  // max |gamma1| / bound over samples
    double worst_gamma2_ratio = 0.0;
    double worst_gamma3_ratio = 0.0;  // over samples in the real-c1 window
    double worst_roth = 0.0;          // max partial sum over samples
    double starlike_worst_ratio = 0.0;

    std::uint64_t gamma3_checked = 0;  // samples with real c1 in [0, 2]
    std::uint64_t gamma3_skipped = 0;  // samples outside the hypothesis window

    std::vector<Violation> violations;
    std::vector<std::string> notes;
};

/// Randomized falsification run: `trials` samples per class; half the trials
/// in real mode. Checks |gamma1| and |gamma2| against the operative bounds
/// for every sample and |gamma3| whenever the sample has real c1 in [0, 2]
/// (the hypothesis window of the gamma3 bound). Also keeps the worst Roth
/// partial sum (n <= 50) and the generator's n|gamma_n| ratio. Violations
/// are reported, never thrown; the report is a pure function of
/// (class, trials, seed).
VerifyReport bound_suite(const ClassSpec& cls, std::uint64_t trials, std::uint64_t seed,
                         int threads = 1);

/// Partial Roth sum sum_{n<=n_max} (n/(n+1))^2 |gamma_n|^2; bounded by
/// (2 pi^2 - 12)/3 for every member.
double roth_partial(const CtcFunction& f, int n_max);
double roth_limit();

/// max over n <= n_max of n |gamma_n(g)| for the class generator g;
/// at most 1 for a starlike generator.
double starlike_gamma_check(const ClassSpec& cls, int n_max);

}  // namespace logcoef
