#pragma once

#include "sentirank/network.hpp"

#include <map>
#include <string>

namespace sentirank {

enum class WeightSource { count, sentiment };

struct PageRankParams {
    WeightSource weights = WeightSource::count;
    double damping = 0.55;      // 0.85 selectable for the weak-rank comparison
    double tolerance = 1e-10;   // L1 change per iteration
    int max_iterations = 200;
};

struct PageRankResult {
    std::map<std::string, double> scores;
    int iterations = 0;
    bool converged = false;
};

/// Power iteration of PR(v) = (1-d)/N + d * sum_{u->v} w(u,v)/W(u) * PR(u)
/// with W(u) the sum of |w(u,.)| over u's out-edges. Signed sentiment
/// weights keep their sign in the transition term; nodes with W(u) = 0
/// spread their mass uniformly. With all-positive weights this is standard
/// PageRank and scores sum to 1.
///
/// Throws InputError for damping outside (0,1) or an empty network.
PageRankResult pagerank(const AuthorNetwork& network, const PageRankParams& params = {});

}  // namespace sentirank
