#include <chordal_forge/json_io.hpp>
#include <chordal_forge/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

using nlohmann::json;

namespace chordal_forge
{
    auto to_json(json & j, const Edge & e) -> void
    {
        j = json::array({ e.u, e.v });
    }

    auto from_json(const json & j, Edge & e) -> void
    {
        if (! j.is_array() || j.size() != 2)
            throw Error("an edge must be a two-element array");
        e = Edge(j[0].get<Vertex>(), j[1].get<Vertex>());
    }

    auto to_json(json & j, const Addition & a) -> void
    {
        j = json{ { "vertex", a.vertex }, { "neighbours", a.neighbours } };
    }

    auto from_json(const json & j, Addition & a) -> void
    {
        j.at("vertex").get_to(a.vertex);
        j.at("neighbours").get_to(a.neighbours);
    }

    auto to_json(json & j, const ChordalSubgraph & h) -> void
    {
        j = json{ { "n", h.n }, { "edges", h.edges }, { "certificate", h.certificate } };
    }

    auto from_json(const json & j, ChordalSubgraph & h) -> void
    {
        j.at("n").get_to(h.n);
        j.at("edges").get_to(h.edges);
        j.at("certificate").get_to(h.certificate);
    }

    auto to_json(json & j, const TraceStep & s) -> void
    {
        j = json{ { "label", s.label }, { "n", s.n }, { "m", s.m }, { "deleted", s.deleted },
            { "added", s.added }, { "removed", s.removed } };
    }

    auto from_json(const json & j, TraceStep & s) -> void
    {
        j.at("label").get_to(s.label);
        j.at("n").get_to(s.n);
        j.at("m").get_to(s.m);
        j.at("deleted").get_to(s.deleted);
        j.at("added").get_to(s.added);
        j.at("removed").get_to(s.removed);
    }

    auto to_json(json & j, const RecursionBudget & b) -> void
    {
        j = json{ { "a", b.a }, { "a_prime", b.a_prime }, { "t", b.t }, { "d0", b.d0 }, { "h", b.h } };
    }

    auto from_json(const json & j, RecursionBudget & b) -> void
    {
        j.at("a").get_to(b.a);
        j.at("a_prime").get_to(b.a_prime);
        j.at("t").get_to(b.t);
        j.at("d0").get_to(b.d0);
        j.at("h").get_to(b.h);
    }

    auto to_json(json & j, const GeneralDiagnostics & d) -> void
    {
        j = json{ { "k", d.k }, { "c", d.c }, { "c1", d.c1 }, { "C", d.C }, { "a", d.a },
            { "target_without_C", d.target_without_C }, { "fitted_C", d.fitted_C },
            { "used_fallback", d.used_fallback }, { "budgets", d.budgets } };
    }

    auto from_json(const json & j, GeneralDiagnostics & d) -> void
    {
        j.at("k").get_to(d.k);
        j.at("c").get_to(d.c);
        j.at("c1").get_to(d.c1);
        j.at("C").get_to(d.C);
        j.at("a").get_to(d.a);
        j.at("target_without_C").get_to(d.target_without_C);
        j.at("fitted_C").get_to(d.fitted_C);
        j.at("used_fallback").get_to(d.used_fallback);
        j.at("budgets").get_to(d.budgets);
    }

    namespace
    {
        auto parse(const std::string & text, const char * what) -> json
        {
            json j;
            try {
                j = json::parse(text);
            }
            catch (const json::exception & e) {
                throw Error(std::string("malformed ") + what + ": " + e.what());
            }
            if (! j.is_object() || ! j.contains("schema_version"))
                throw Error(std::string(what) + " has no schema_version");
            if (j["schema_version"] != json_schema_version)
                throw Error(std::string(what) + " has unsupported schema_version " + j["schema_version"].dump());
            return j;
        }

        template <typename F_>
        auto decode(const char * what, F_ && f)
        {
            try {
                return f();
            }
            catch (const json::exception & e) {
                throw Error(std::string("invalid ") + what + ": " + e.what());
            }
        }
    }

    auto report_to_json(const ExtractionReport & r, std::optional<double> elapsed_seconds) -> std::string
    {
        json j{
            { "schema_version", json_schema_version },
            { "algorithm", r.algorithm },
            { "n", r.n },
            { "m", r.m },
            { "subgraph", r.subgraph },
            { "achieved", r.achieved },
            { "guarantee", r.guarantee },
            { "anchor", r.anchor },
            { "trace", r.trace },
        };
        if (r.general)
            j["general"] = *r.general;
        if (elapsed_seconds)
            j["elapsed_seconds"] = *elapsed_seconds;
        return j.dump(2) + "\n";
    }

    auto report_from_json(const std::string & text) -> ExtractionReport
    {
        auto j = parse(text, "report");
        return decode("report", [&] {
            ExtractionReport r;
            j.at("algorithm").get_to(r.algorithm);
            j.at("n").get_to(r.n);
            j.at("m").get_to(r.m);
            j.at("subgraph").get_to(r.subgraph);
            j.at("achieved").get_to(r.achieved);
            j.at("guarantee").get_to(r.guarantee);
            j.at("anchor").get_to(r.anchor);
            j.at("trace").get_to(r.trace);
            if (j.contains("general"))
                r.general = j["general"].get<GeneralDiagnostics>();
            return r;
        });
    }

    auto ftable_to_json(const FTable & table) -> std::string
    {
        json entries = json::array();
        for (auto & e : table.entries())
            entries.push_back(json{ { "n", e.n }, { "m", e.m }, { "f", e.f_exact }, { "witness_edges", e.extremal_graph } });
        json j{ { "schema_version", json_schema_version }, { "entries", entries } };
        return j.dump(2) + "\n";
    }

    auto ftable_from_json(const std::string & text) -> FTable
    {
        auto j = parse(text, "f table");
        return decode("f table", [&] {
            FTable table;
            for (auto & e : j.at("entries")) {
                FTableEntry entry;
                e.at("n").get_to(entry.n);
                e.at("m").get_to(entry.m);
                e.at("f").get_to(entry.f_exact);
                e.at("witness_edges").get_to(entry.extremal_graph);
                table.insert(std::move(entry));
            }
            return table;
        });
    }

    auto read_text_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw Error("cannot open " + path + " for reading");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_text_file(const std::string & path, const std::string & text) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw Error("cannot open " + path + " for writing");
        out << text;
        if (! out)
            throw Error("failed writing " + path);
    }
}
