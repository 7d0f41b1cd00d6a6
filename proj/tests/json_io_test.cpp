#include <chordal_forge/bounds.hpp>
#include <chordal_forge/errors.hpp>
#include <chordal_forge/extract_exact.hpp>
#include <chordal_forge/extract_general.hpp>
#include <chordal_forge/json_io.hpp>
#include <chordal_forge/oracle.hpp>
#include <chordal_forge/random_graphs.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>

using namespace chordal_forge;

TEST(ReportJson, RoundTripExact)
{
    Rng rng(1);
    auto g = random_graph(20, turan_number(2, 20) + 15, rng);
    auto r = extract_k2(g, *smallest_triangle(g));
    auto text = report_to_json(r, 0.25);
    EXPECT_EQ(report_from_json(text), r);
    auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j.at("schema_version"), json_schema_version);
    EXPECT_DOUBLE_EQ(j.at("elapsed_seconds").get<double>(), 0.25);
}

TEST(ReportJson, RoundTripGeneral)
{
    Rng rng(2);
    auto g = random_graph(30, turan_number(2, 30) + 100, rng);
    auto r = extract_general(g, GeneralParams{ 2, 0.05, 0.1, 0.2 });
    ASSERT_TRUE(r.general.has_value());
    auto back = report_from_json(report_to_json(r));
    EXPECT_EQ(back, r);
    EXPECT_FALSE(report_problem(g, back).has_value());
}

TEST(ReportJson, RejectsWrongSchema)
{
    Rng rng(3);
    auto g = random_graph(6, 8, rng);
    auto j = nlohmann::json::parse(report_to_json(extract_k1(g)));
    j["schema_version"] = 99;
    EXPECT_THROW(report_from_json(j.dump()), Error);
    j.erase("schema_version");
    EXPECT_THROW(report_from_json(j.dump()), Error);
    EXPECT_THROW(report_from_json("{ not json"), Error);
}

TEST(FTableJson, RoundTrip)
{
    FTable table;
    table.get_or_compute(4, 5);
    table.get_or_compute(5, 7);
    auto back = ftable_from_json(ftable_to_json(table));
    ASSERT_EQ(back.entries().size(), 2u);
    for (std::size_t i = 0 ; i < 2 ; ++i) {
        EXPECT_EQ(back.entries()[i].n, table.entries()[i].n);
        EXPECT_EQ(back.entries()[i].m, table.entries()[i].m);
        EXPECT_EQ(back.entries()[i].f_exact, table.entries()[i].f_exact);
        EXPECT_EQ(back.entries()[i].extremal_graph, table.entries()[i].extremal_graph);
    }
    auto j = nlohmann::json::parse(ftable_to_json(table));
    EXPECT_TRUE(j.at("entries")[0].contains("witness_edges"));
    EXPECT_TRUE(j.at("entries")[0].contains("f"));
}

TEST(TextFiles, WriteThenRead)
{
    auto path = (std::filesystem::temp_directory_path() / "chordal_forge_json_io_test.txt").string();
    write_text_file(path, "hello\n");
    EXPECT_EQ(read_text_file(path), "hello\n");
    std::filesystem::remove(path);
    EXPECT_THROW(read_text_file(path), Error);
}
