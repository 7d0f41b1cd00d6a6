#ifndef CHORDAL_FORGE_REPORT_HPP
#define CHORDAL_FORGE_REPORT_HPP

#include <chordal_forge/chordality.hpp>
#include <chordal_forge/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chordal_forge
{
    /// One level of an inductive extraction, in the caller's vertex ids.
    struct TraceStep
    {
        std::string label;
        int n = 0;
        Count m = 0;
        std::vector<Vertex> deleted;
        EdgeList added;
        EdgeList removed;

        auto operator== (const TraceStep &) const -> bool = default;
    };

    /// Bookkeeping of one large-surplus deletion step.
    struct RecursionBudget
    {
        double a = 0;
        double a_prime = 0;
        int t = 0;
        double d0 = 0;
        double h = 0;

        auto operator== (const RecursionBudget &) const -> bool = default;
    };

    struct GeneralDiagnostics
    {
        int k = 0;
        double c = 0;
        double c1 = 0;
        double C = 0;
        Count a = 0;
        double target_without_C = 0;
        double fitted_C = 0;
        bool used_fallback = false;
        std::vector<RecursionBudget> budgets;

        auto operator== (const GeneralDiagnostics &) const -> bool = default;
    };

    struct ExtractionReport
    {
        std::string algorithm;
        int n = 0;
        Count m = 0;
        ChordalSubgraph subgraph;
        Count achieved = 0;
        Count guarantee = 0;
        std::vector<Vertex> anchor;
        std::vector<TraceStep> trace;
        std::optional<GeneralDiagnostics> general;

        auto operator== (const ExtractionReport &) const -> bool = default;
    };

    /// Everything a report promises about host, or the first broken promise:
    /// certificate replays, edge count matches, anchor clique is present, and
    /// achieved meets the guarantee.
    auto report_problem(const Graph & host, const ExtractionReport & r) -> std::optional<std::string>;
}

#endif
