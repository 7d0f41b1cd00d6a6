#ifndef CHORDAL_FORGE_SRC_EXTRACT_SUPPORT_HPP
#define CHORDAL_FORGE_SRC_EXTRACT_SUPPORT_HPP

#include <chordal_forge/chordality.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/graph.hpp>
#include <chordal_forge/report.hpp>

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace chordal_forge::detail
{
    inline auto expect(bool condition, const std::string & what) -> void
    {
        if (! condition)
            throw InternalInvariantError(what);
    }

    inline auto compose(const std::vector<Vertex> & to_top, const std::vector<Vertex> & to_parent) -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(to_parent.size());
        for (auto v : to_parent)
            result.push_back(to_top[v]);
        return result;
    }

    inline auto local_id(const InducedSubgraph & sub, Vertex host) -> Vertex
    {
        auto at = std::lower_bound(sub.to_host.begin(), sub.to_host.end(), host);
        expect(at != sub.to_host.end() && *at == host, "vertex " + std::to_string(host) + " was deleted");
        return static_cast<Vertex>(at - sub.to_host.begin());
    }

    /// Builder over g holding a chordal subgraph found inside sub.
    inline auto into_parent(const Graph & g, const InducedSubgraph & sub, const ChordalSubgraph & inner) -> ChordalBuilder
    {
        return ChordalBuilder::from_subgraph(g, lift(inner, sub.to_host, g.n()));
    }

    inline auto contains_clique(const ChordalSubgraph & h, std::span<const Vertex> clique) -> bool
    {
        auto edges = h.edges;
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0 ; i < clique.size() ; ++i)
            for (std::size_t j = i + 1 ; j < clique.size() ; ++j)
                if (! std::binary_search(edges.begin(), edges.end(), Edge(clique[i], clique[j])))
                    return false;
        return true;
    }

    /// Collects one TraceStep per recursion level, outermost first, with all
    /// vertex ids translated to the top-level graph.
    class Tracer
    {
        private:
            std::vector<TraceStep> _steps;

            static auto translate(const std::vector<Vertex> & to_top, const EdgeList & edges) -> EdgeList
            {
                EdgeList result;
                for (auto & e : edges)
                    result.emplace_back(to_top[e.u], to_top[e.v]);
                std::sort(result.begin(), result.end());
                return result;
            }

        public:
            auto open(const std::string & label, const Graph & g, const std::vector<Vertex> & to_top,
                    std::vector<Vertex> deleted) -> std::size_t
            {
                TraceStep step;
                step.label = label;
                step.n = g.n();
                step.m = g.m();
                for (auto & v : deleted)
                    v = to_top[v];
                std::sort(deleted.begin(), deleted.end());
                step.deleted = std::move(deleted);
                _steps.push_back(std::move(step));
                return _steps.size() - 1;
            }

            auto mark(std::size_t step, const std::string & suffix) -> void
            {
                _steps[step].label += suffix;
            }

            auto close(std::size_t step, const std::vector<Vertex> & to_top, EdgeList before, const ChordalSubgraph & after) -> void
            {
                auto now = after.edges;
                std::sort(before.begin(), before.end());
                std::sort(now.begin(), now.end());
                EdgeList added, removed;
                std::set_difference(now.begin(), now.end(), before.begin(), before.end(), std::back_inserter(added));
                std::set_difference(before.begin(), before.end(), now.begin(), now.end(), std::back_inserter(removed));
                _steps[step].added = translate(to_top, added);
                _steps[step].removed = translate(to_top, removed);
            }

            auto steps() const -> const std::vector<TraceStep> & { return _steps; }
    };
}

#endif
