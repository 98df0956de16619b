#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sentirank {

/// competition_min: tied entities share the minimum position (1,1,3).
/// fractional: tied entities share the mean of their positions (2.5, 2.5).
enum class TiePolicy { competition_min, fractional };

const char* tie_policy_name(TiePolicy policy);

struct RankedEntry {
    std::string entity;
    double score = 0.0;
    double rank = 0.0;
};

/// Entries sorted by descending score, ascending entity id within ties.
/// Rank values depend on scores only, never on the id tie-break.
struct RankedList {
    std::vector<RankedEntry> entries;
    TiePolicy policy = TiePolicy::competition_min;
};

/// Throws InputError on a non-finite score, naming the entity.
RankedList ranks_from_scores(const std::map<std::string, double>& scores, TiePolicy policy);

struct KendallResult {
    double tau = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

/// Tie-corrected Kendall tau-b over paired observations, with a two-sided
/// p-value from the normal approximation (tie-corrected variance).
/// O(n log n). Throws AnalysisError for n < 2 or when either variable is
/// entirely tied (degenerate variance).
KendallResult kendall_tau(std::span<const double> x, std::span<const double> y);

/// Rank-biased distance between two rankings of the same entity universe:
/// (1-p) * sum_{d=1..k} |S_d symdiff T_d| / (2d) * p^(d-1), with prefixes
/// formed after the deterministic id tie-break. Result lies in [0, 1-p^k].
double rbd(const RankedList& a, const RankedList& b, double p, std::size_t k);

struct ComparisonReport {
    std::size_t n = 0;         // paired entities
    double tau = 0.0;
    double p_value = 1.0;
    double rbd = 0.0;
    double rbd_p = 0.9;
    std::size_t depth = 0;
};

/// Pairs two score tables on their shared entities and reports tau, p, and
/// RBD at the given persistence and depth (default depth: all shared
/// entities). Throws AnalysisError when fewer than 2 entities are shared.
ComparisonReport compare_scores(const std::map<std::string, double>& a,
                                const std::map<std::string, double>& b, double rbd_p = 0.9,
                                std::size_t depth = 0);

}  // namespace sentirank
