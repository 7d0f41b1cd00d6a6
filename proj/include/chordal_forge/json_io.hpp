#ifndef CHORDAL_FORGE_JSON_IO_HPP
#define CHORDAL_FORGE_JSON_IO_HPP

#include <chordal_forge/oracle.hpp>
#include <chordal_forge/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chordal_forge
{
    inline constexpr int json_schema_version = 1;

    /// Reports and tables as JSON text. Parsing throws Error on malformed
    /// input or a schema version this build does not know. The elapsed time
    /// is written for information and ignored when reading.
    auto report_to_json(const ExtractionReport & r, std::optional<double> elapsed_seconds = std::nullopt) -> std::string;
    auto report_from_json(const std::string & text) -> ExtractionReport;

    auto ftable_to_json(const FTable & table) -> std::string;
    auto ftable_from_json(const std::string & text) -> FTable;

    auto read_text_file(const std::string & path) -> std::string;
    auto write_text_file(const std::string & path, const std::string & text) -> void;
}

#endif
