#include "sentirank/network.hpp"

#include "sentirank/util.hpp"

#include <ostream>

namespace sentirank {
namespace {

// DOT string escaping for author ids used as node names.
std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

NetworkBuildResult build_author_network(const std::vector<PairScore>& pair_scores,
                                        const AuthorshipTable& authorship) {
    NetworkBuildResult result;
    std::map<std::pair<std::string, std::string>, CompensatedSum> sums;
    for (const auto& ps : pair_scores) {
        auto citing = authorship.entries.find(ps.pair.first);
        auto cited = authorship.entries.find(ps.pair.second);
        if (citing == authorship.entries.end() || cited == authorship.entries.end()) {
            ++result.pairs_missing_authorship;
            continue;
        }
        ++result.pairs_used;
        for (const auto& from : citing->second) {
            for (const auto& to : cited->second) {
                if (from == to) {
                    // Cannot happen on a corpus filtered by author overlap,
                    // only when the self-citation pair set came from outside.
                    ++result.self_loops_skipped;
                    continue;
                }
                auto& edge = result.network.edges[{from, to}];
                edge.count += 1;
                sums[{from, to}].add(ps.score);
                result.network.nodes.insert(from);
                result.network.nodes.insert(to);
            }
        }
    }
    for (auto& [key, edge] : result.network.edges) edge.sentiment = sums.at(key).value();
    return result;
}

void write_edge_list(const AuthorNetwork& network, std::ostream& out) {
    out << "citing_author\tcited_author\tcount\tsentiment\n";
    for (const auto& [key, edge] : network.edges) {
        out << key.first << '\t' << key.second << '\t' << edge.count << '\t'
            << format_real(edge.sentiment) << '\n';
    }
}

void write_dot(const AuthorNetwork& network, std::ostream& out) {
    out << "digraph author_citations {\n";
    for (const auto& node : network.nodes) {
        out << "  " << dot_quote(node) << ";\n";
    }
    for (const auto& [key, edge] : network.edges) {
        out << "  " << dot_quote(key.first) << " -> " << dot_quote(key.second) << " [label=\""
            << edge.count << '(' << format_real(edge.sentiment) << ")\"];\n";
    }
    out << "}\n";
}

}  // namespace sentirank
