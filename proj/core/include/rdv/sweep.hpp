// Experiment configuration and the Jaccard-sweep driver: per-trial seed
// derivation, parallel execution with order-independent results, and the
// CSV/JSON row format.
#ifndef RDV_SWEEP_HPP
#define RDV_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdv/generators.hpp"
#include "rdv/scenario.hpp"
#include "rdv/sim.hpp"

namespace rdv {

struct HorizonRule {
    enum class Kind { Fixed, TheoremBound };
    Kind kind = Kind::Fixed;
    std::uint64_t slots = 10000;

    static HorizonRule fixed(std::uint64_t s) { return {Kind::Fixed, s}; }
    static HorizonRule theorem_bound() { return {Kind::TheoremBound, 0}; }
};

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Random;
    int width = 8;  // L
    std::uint32_t n1 = 60;
    std::uint32_t n2 = 60;
    std::vector<std::uint32_t> n12_list;
    std::optional<std::uint32_t> multiplier;  // K; only the ring-based family
    std::optional<std::uint32_t> t0;          // only multiset algorithms
    std::optional<double> p0;                 // only mixed/bounded algorithms
    DriftModel drift = DriftModel::sync();
    std::uint64_t trials = 10000;
    std::size_t batch = 100;  // trials per batch for the measured MTTR
    HorizonRule horizon;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency

    /// Applicability and feasibility checks; throws std::invalid_argument
    /// naming the offending field.
    void validate() const;

    AlgorithmParams algorithm_params() const;  // with defaults filled in
    std::uint64_t horizon_for(std::uint32_t n12) const;
};

/// One aggregated row of a sweep.
struct SweepRow {
    std::string algorithm;
    int width;
    std::uint32_t n1, n2, n12;
    double jaccard;
    std::optional<std::uint32_t> multiplier;
    std::optional<std::uint32_t> t0;
    std::optional<double> p0;
    std::uint64_t trials;
    double ettr;
    double ettr_ci95;
    double mttr;
    std::uint64_t timeouts;
    std::uint64_t seed;
};

/// All trials of one sweep point, in trial order. Deterministic in
/// (config.seed, n12) and independent of config.threads.
std::vector<TrialRecord> run_point(const ExperimentConfig& config, std::uint32_t n12);

/// One row per n12 value.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

/// Inputs of a single trial, exposed so one sweep trial can be replayed in
/// isolation (debug dumps, tests).
struct TrialSetup {
    ChannelSet f1, f2;
    TrialPair pair;
    std::uint32_t drift;
    std::uint64_t horizon;
    std::uint64_t trial_seed;
};
TrialSetup make_trial(const ExperimentConfig& config, std::uint32_t n12,
                      std::uint64_t trial_index);

std::string csv_header();
std::string to_csv(const SweepRow& row);

}  // namespace rdv

#endif
