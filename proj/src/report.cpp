#include <chordal_forge/report.hpp>

#include <algorithm>

namespace chordal_forge
{
    auto report_problem(const Graph & host, const ExtractionReport & r) -> std::optional<std::string>
    {
        if (r.n != host.n() || r.m != host.m())
            return "report is for a graph with " + std::to_string(r.n) + " vertices and " + std::to_string(r.m)
                + " edges, host has " + std::to_string(host.n()) + " and " + std::to_string(host.m());
        if (auto problem = certificate_problem(host, r.subgraph))
            return "certificate: " + *problem;
        if (r.achieved != r.subgraph.edge_count())
            return "achieved " + std::to_string(r.achieved) + " but subgraph has " + std::to_string(r.subgraph.edge_count()) + " edges";
        auto edges = r.subgraph.edges;
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0 ; i < r.anchor.size() ; ++i)
            for (std::size_t j = i + 1 ; j < r.anchor.size() ; ++j) {
                Edge e(r.anchor[i], r.anchor[j]);
                if (! std::binary_search(edges.begin(), edges.end(), e))
                    return "anchor edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") missing";
            }
        if (r.achieved < r.guarantee)
            return "achieved " + std::to_string(r.achieved) + " is below the guarantee " + std::to_string(r.guarantee);
        return std::nullopt;
    }
}
