#ifndef MONOHIER_VERIFY_HPP
#define MONOHIER_VERIFY_HPP

#include "monohier/partitions.hpp"
#include "monohier/states.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monohier::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  // failure explanation or brief statistics
    double millis = 0.0;
};

struct Options {
    std::uint64_t seed = 0;
    int max_k = 3;      // pair-count scale for combinatorial corpora
    int word_len = 5;   // word length for state-evaluator corpora
    bool parallel = false;
    std::size_t basis_cap = states::ProductSpaceOptions{}.basis_cap;
};

std::vector<std::string> suite_names();

/// Runs one suite ("moments", "partitions", "states", "spectra", "fock",
/// "poisson") or "all". Checks are independent and side-effect free; with
/// options.parallel they run concurrently.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& options);

/// Seeded corpus of support profiles over at most `max_intervals` distinct
/// intervals (identical-or-disjoint by construction).
std::vector<partitions::SupportProfile> random_profiles(std::uint64_t seed, int count,
                                                        int max_len, int max_intervals);

/// Seeded random marginal built from exact tridiagonal data, reproducing
/// its own moments by construction.
states::AlgebraSpec random_marginal(std::uint64_t seed, int index, int dimension, int max_order);

} // namespace monohier::verify

#endif
