#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvb/search.hpp"

namespace tvb {

enum class Distribution { Cube, Moment };

enum class CampaignStrategy { Auto, HeuristicOnly, ExhaustiveOnly };

// Validation target. Each names the hypothesis set the parameters are
// checked against before a campaign runs.
enum class Target { Thm51, Cor53, Cor55, Thm57, Thm58, Thm59 };

struct CampaignParams {
    int d = 1;
    int r = 2;
    std::vector<int> color_sizes;
    std::vector<int> caps;
    int trials = 1;
    uint64_t seed = 0;
    Distribution dist = Distribution::Cube;
    CampaignStrategy strategy = CampaignStrategy::Auto;
    uint64_t enum_bound = 10000000;
    int restarts = 10000;
    Target target = Target::Thm51;

    int m() const { return static_cast<int>(color_sizes.size()); }
};

bool is_prime_power(int r);

Target target_from_name(const std::string& name);
std::string target_name(Target t);

// Fills color_sizes and caps with the smallest values admitted by the
// target's hypotheses. Caps left free by the statement default to r.
CampaignParams make_preset(Target t, int d, int r);

// Throws std::invalid_argument naming the violated hypothesis.
void validate_hypotheses(const CampaignParams& p);

// Deterministic from (seed, trial_index). cube draws integer coordinates
// from [-10^6, 10^6]; moment places vertex k at (t_k, t_k^2, ..., t_k^d)
// for distinct random integers t_k.
Instance random_instance(const CampaignParams& p, int trial_index);

enum class TrialOutcome { Found, NotFound, NotFoundExhaustive, BoundExceeded };

struct TrialRecord {
    int index = 0;
    TrialOutcome outcome = TrialOutcome::NotFound;
    bool exhaustive = false;  // outcome was decided by exhaustive search
};

struct CampaignReport {
    CampaignParams params;
    std::vector<TrialRecord> trials;
    int found = 0;
    int not_found = 0;
    int bound_exceeded = 0;
    // An exhaustive not-found under theorem hypotheses; indicates a bug,
    // never expected on a valid run.
    bool contradiction = false;
    std::optional<int> first_failing_trial;
    std::optional<std::string> first_failing_instance;  // serialized tvb1

    std::string render() const;  // bit-identical across reruns; no timings
};

CampaignReport run_campaign(const CampaignParams& p, bool force = false);

struct HuntTrial {
    int index = 0;
    long long count = -1;  // -1 when inconclusive
    bool inconclusive = false;
};

struct HuntReport {
    CampaignParams params;
    std::vector<HuntTrial> trials;
    int zero_count = 0;
    int inconclusive = 0;
    // Serialized tvb1 text of every zero-count instance, by trial index.
    std::vector<std::pair<int, std::string>> candidates;

    std::string render() const;
};

// Affine counterexample hunt for the open all-caps-(r-1) question: caps must
// be r-1 on all d+1 colors, sizes at least 2r-1; every trial is decided
// exhaustively or marked inconclusive.
HuntReport hunt_counterexample(const CampaignParams& p, bool force = false);

}  // namespace tvb
