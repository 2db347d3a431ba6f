#pragma once

// Partition functions Z_n(s) = sum over words w of length n of ||D phi_w||^s,
// pressure brackets, and Bowen-dimension bisection.

#include <cstddef>
#include <vector>

#include "hurwitz/digit_set.hpp"
#include "hurwitz/gaussian.hpp"

namespace hurwitz {

enum class NormMode { sup_norm, base_point };

const char* to_string(NormMode m);

struct PartitionOptions {
    std::size_t max_words = 2'000'000;
    double prune_tol = 0.0;     // 0 disables branch-and-bound
    double k0 = 25.0 / 9.0;     // distortion constant for the lower bracket
};

struct PressureEstimate {
    double s = 0.0;
    int n = 0;
    NormMode mode = NormMode::sup_norm;
    double log_z = 0.0;
    double log_zn_over_n = 0.0;
    double lower_bracket = 0.0;
    double upper_bracket = 0.0;
    double dropped_mass = 0.0;  // mass removed by pruning, added to the upper bracket
    std::size_t words = 0;
    bool pruned = false;
};

/// Validates that every letter lies in D2 and returns them as Gaussian integers.
std::vector<GaussianInt> ifs_alphabet(const DigitSet& set);

/// Throws BudgetExceeded when the enumeration would exceed max_words.
PressureEstimate partition_sum(const std::vector<GaussianInt>& alphabet, int n, double s, NormMode mode,
                               const PartitionOptions& options = {});

/// log ||D phi_w|| for every word of one length, so Z_n(s) can be re-evaluated cheaply.
class WordSpectrum {
public:
    static WordSpectrum enumerate(const std::vector<GaussianInt>& alphabet, int n, NormMode mode,
                                  std::size_t max_words);

    int length() const { return n_; }
    std::size_t size() const { return log_norms_.size(); }
    double log_z(double s) const;
    PressureEstimate estimate(double s, double k0) const;

private:
    int n_ = 0;
    NormMode mode_ = NormMode::sup_norm;
    std::vector<double> log_norms_;
};

struct BowenOptions {
    double tol = 1e-3;
    int n_max = 12;
    std::size_t max_words = 2'000'000;
    double k0 = 25.0 / 9.0;
    int max_iterations = 200;
    NormMode mode = NormMode::sup_norm;
};

struct BowenDimResult {
    double s_low = 0.0;
    double s_high = 2.0;
    int n_used = 0;
    int iterations = 0;
    bool low_certified = false;   // lower bracket at s_low is >= 0
    bool high_certified = false;  // upper bracket at s_high is <= 0
    bool conclusive = false;
    double certified_low = 0.0;   // root of the lower bracket
    double certified_high = 2.0;  // root of the upper bracket
    bool midpoints_monotone = true;
    PressureEstimate at_low;
    PressureEstimate at_high;
};

/// Bisection on [0, 2]. Where the bracket straddles 0 the sign is taken from
/// log(Z_n / Z_{n-1}) clamped into the bracket; certification flags report
/// which ends are decided by the bracket alone.
BowenDimResult bowen_dimension(const std::vector<GaussianInt>& alphabet, const BowenOptions& options = {});

}  // namespace hurwitz
