#pragma once

#include "sentirank/aggregate.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace sentirank {

/// Accumulated weight on one citing-author -> cited-author edge: the number
/// of contributing (citing article, cited article) pairs and the sum of
/// their sentiment scores (any sign).
struct EdgeWeight {
    std::int64_t count = 0;
    double sentiment = 0.0;
};

struct AuthorNetwork {
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, EdgeWeight> edges;
};

struct NetworkBuildResult {
    AuthorNetwork network;
    std::size_t pairs_used = 0;
    std::size_t pairs_missing_authorship = 0;  // skipped, coverage warning
    std::size_t self_loops_skipped = 0;        // only if the pair set was supplied externally
};

/// Fans each article pair out to every (citing author, cited author)
/// combination: count += 1 and sentiment += pair score per edge.
NetworkBuildResult build_author_network(const std::vector<PairScore>& pair_scores,
                                        const AuthorshipTable& authorship);

/// Edge-list TSV: citing_author, cited_author, count, sentiment.
void write_edge_list(const AuthorNetwork& network, std::ostream& out);

/// DOT digraph with "count(sentiment)" edge labels.
void write_dot(const AuthorNetwork& network, std::ostream& out);

}  // namespace sentirank
