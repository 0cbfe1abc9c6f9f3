#pragma once

// Monte Carlo verification campaigns over seeded random embeddings. Per-trial
// seeds are seed + index, so any failing trial replays in isolation. Trials
// whose resampling budget runs out are recorded as degenerate (and count
// against success) rather than aborting the run.

#include "prodembed/linking.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prodembed {

enum class CampaignKind {
    SacksN,               // random L = (sigma^0_3)^{*n} in R^{2n-1}: linked pair + v = 1
    ConwayGordonK6,       // random K6 in R^3: linked triangles + mod-2 sum = 1
    ObstructionInvariance // random L: v = 1 in every trial
};

struct CampaignResult {
    CampaignKind kind = CampaignKind::SacksN;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int linked_trials = 0;              // trials with a linked pair
    std::map<int, int> v_histogram;     // parity value -> trials (v, or K6 mod-2 sum)
    std::vector<std::uint64_t> failing_seeds;
    std::vector<std::uint64_t> degenerate_seeds;
    bool success = false;
};

// kind-dependent per-trial pass: SacksN = linked pair found and v = 1;
// ConwayGordonK6 = linked triangles found and mod-2 sum = 1 (n ignored);
// ObstructionInvariance = v = 1.
CampaignResult run_campaign(CampaignKind kind, int n, int trials, std::uint64_t seed);

struct VanishingResult {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> polygon_failing_seeds; // parity != 0
    std::vector<std::uint64_t> torus_failing_seeds;
    std::vector<std::uint64_t> degenerate_seeds;
    bool success = false;
};

// Two separately placed closed polygons in R^2 and two 3x3-grid polyhedral
// tori in R^4: closed manifolds of complementary dimension always intersect
// with parity 0. Non-generic draws are redrawn within the trial.
VanishingResult vanishing_campaign(int trials, std::uint64_t seed);

std::string campaign_kind_name(CampaignKind k);

} // namespace prodembed
