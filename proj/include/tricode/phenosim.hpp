#pragma once

#include <optional>

#include "tricode/decoder.hpp"
#include "tricode/rng.hpp"

namespace tricode {

enum class NoiseFlavor { BitFlip, BitPhase };  // X only, or independent X and Z
enum class SyndromeMode { Ideal, Noisy };

struct NoiseModel {
    NoiseFlavor flavor = NoiseFlavor::BitFlip;
    SyndromeMode syndrome = SyndromeMode::Ideal;
    double p = 0.0;  // per-qubit, per-round error probability
    double q = -1;   // syndrome flip probability; negative means q = p

    double flip_q() const { return q < 0 ? p : q; }
};

struct TrialResult {
    int residual_class = 0;  // 0 I, 1 X, 2 Y, 3 Z
    bool failed = false;
    int rounds = 1;
    uint64_t seed = 0;
};

/// Reusable per-(code, model) simulation state: decoding graphs are built
/// once and shared by all trials.
class PhenoSim {
  public:
    PhenoSim(StabilizerCode code, NoiseModel model);

    const StabilizerCode& code() const { return code_; }
    const NoiseModel& model() const { return model_; }

    TrialResult run_trial(uint64_t trial_seed) const;

  private:
    StabilizerCode code_;
    NoiseModel model_;
    int rounds_;
    // Triangle: one combined graph. Rotated surface: X and Z error graphs
    // decoded separately.
    std::vector<DecodingGraph> graphs_;
};

/// One-shot convenience wrapper.
TrialResult run_trial(const StabilizerCode& code, const NoiseModel& model, uint64_t seed);

struct RateEstimate {
    double rate = 0, ci_lo = 0, ci_hi = 0;  // Wilson 95% interval
    uint64_t failures = 0, samples = 0;
};

RateEstimate wilson_interval(uint64_t failures, uint64_t samples);

/// Monte-Carlo logical failure rate; deterministic for fixed seed regardless
/// of worker count (0 workers = hardware concurrency).
RateEstimate estimate_logical_rate(const StabilizerCode& code, const NoiseModel& model, uint64_t n_samples,
                                   uint64_t master_seed, int workers = 0);

struct PairCrossing {
    int d_small = 0, d_large = 0;
    double crossing = 0;
    double ci_lo = 0, ci_hi = 0;  // from rate-CI extremes
};

struct ThresholdEstimate {
    bool found = false;
    double median_crossing = 0;
    double spread = 0;  // max - min over pairs
    std::vector<PairCrossing> pairs;
    // rates[d][grid index]
    std::vector<int> distances;
    std::vector<double> p_grid;
    std::vector<std::vector<RateEstimate>> rates;
};

/// Pairwise curve-crossing threshold estimate over (d, d+2) pairs with
/// log-linear interpolation between grid points.
ThresholdEstimate estimate_threshold(CodeSpec::Kind family, const NoiseModel& model, const std::vector<int>& distances,
                                     const std::vector<double>& p_grid, uint64_t n_samples, uint64_t master_seed,
                                     int workers = 0);

}  // namespace tricode
