#include "sentirank/pagerank.hpp"

#include "sentirank/error.hpp"
#include "sentirank/util.hpp"

#include <cmath>
#include <vector>

namespace sentirank {

PageRankResult pagerank(const AuthorNetwork& network, const PageRankParams& params) {
    if (!(params.damping > 0.0 && params.damping < 1.0)) {
        throw InputError("damping factor must lie in (0,1), got " + format_real(params.damping));
    }
    if (network.nodes.empty()) throw InputError("pagerank on an empty network");

    const std::size_t n = network.nodes.size();
    std::map<std::string, std::size_t> index;
    std::vector<const std::string*> names(n);
    {
        std::size_t i = 0;
        for (const auto& node : network.nodes) {
            names[i] = &node;
            index.emplace(node, i++);
        }
    }

    struct Edge {
        std::size_t from, to;
        double weight;
    };
    std::vector<Edge> edges;
    edges.reserve(network.edges.size());
    std::vector<double> out_norm(n, 0.0);  // W(u) = sum of |w(u,.)|
    for (const auto& [key, ew] : network.edges) {
        const double w = params.weights == WeightSource::count
                             ? static_cast<double>(ew.count)
                             : ew.sentiment;
        const std::size_t from = index.at(key.first);
        edges.push_back({from, index.at(key.second), w});
        out_norm[from] += std::abs(w);
    }

    const double d = params.damping;
    const double base = (1.0 - d) / static_cast<double>(n);
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);

    PageRankResult result;
    for (int iter = 1; iter <= params.max_iterations; ++iter) {
        // Nodes without usable out-weight (dangling, or all-zero sentiment
        // out-edges) distribute their mass uniformly.
        double dangling = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (out_norm[i] == 0.0) dangling += rank[i];
        }
        const double spread = base + d * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), spread);
        for (const Edge& e : edges) {
            if (out_norm[e.from] == 0.0) continue;
            next[e.to] += d * (e.weight / out_norm[e.from]) * rank[e.from];
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
        rank.swap(next);
        result.iterations = iter;
        if (delta <= params.tolerance) {
            result.converged = true;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) result.scores.emplace(*names[i], rank[i]);
    return result;
}

}  // namespace sentirank
