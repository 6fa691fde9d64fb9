#include "centerkit/fiber_graph.hpp"
#include "centerkit/io.hpp"
#include "centerkit/report.hpp"
#include "centerkit/svg.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

#include <filesystem>
#include <functional>
#include <fstream>
#include <regex>

using namespace centerkit;
using nlohmann::json;

namespace {

std::string fixture_json(std::vector<long> m) { return arrangement_to_json(fixture::standard(std::move(m))); }

std::string error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

long svg_attribute(const std::string& svg, const std::string& name) {
    std::smatch m;
    if (!std::regex_search(svg, m, std::regex(name + "=\"([0-9]+)\""))) return -1;
    return std::stol(m[1]);
}

TEST(Parse, ArrangementRoundTrip) {
    const auto arr = parse_arrangement(R"({"lines": [[1, 0, 0], [0, "2/4", 0], [1, 1, "-1"]], "multiplicities": [1, 2, 3]})");
    ASSERT_EQ(arr.size(), 3u);
    EXPECT_EQ(arr.line(1).b, Rational(1, 2));
    EXPECT_EQ(arr.multiplicity(2), 3);
    const auto again = parse_arrangement(arrangement_to_json(arr));
    EXPECT_EQ(arrangement_to_json(again), arrangement_to_json(arr));
}

TEST(Parse, ErrorsNameTheField) {
    EXPECT_NE(error_of([] { parse_arrangement("{"); }).find("malformed JSON"), std::string::npos);
    EXPECT_NE(error_of([] { parse_arrangement(R"({"multiplicities": [1]})"); }).find("lines"), std::string::npos);
    EXPECT_NE(error_of([] { parse_arrangement(R"({"lines": []})"); }).find("multiplicities"), std::string::npos);
    EXPECT_NE(error_of([] { parse_arrangement(R"({"lines": [[1, 0]], "multiplicities": [1]})"); }).find("lines[0]"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_arrangement(R"({"lines": [[1, 0, "x/y"]], "multiplicities": [1]})"); }).find("lines[0]"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_arrangement(R"({"lines": [[1, 0, 0]], "multiplicities": [1.5]})"); })
                  .find("multiplicities[0]"),
              std::string::npos);
    EXPECT_NE(error_of([] { parse_form(R"({"coefficients": [1, 2, 3]})"); }).find("coefficients"), std::string::npos);
    EXPECT_NE(error_of([] { parse_form(R"({"degree": 1, "coefficients": [1, 2, 3, 4, 5, 6]})", 2); }).find("degree"),
              std::string::npos);
}

TEST(Parse, FormOrdering) {
    const auto form = parse_form(R"({"degree": 1, "coefficients": [1, 0, 0, 0, 0, "1/2"]})");
    EXPECT_EQ(form.degree, 1u);
    EXPECT_EQ(form.coefficients[5], Rational(1, 2));
    EXPECT_THROW(parse_form(R"({"coefficients": [1, 2, 3, 4, 5, 6]})", 2), InputError);
}

TEST(Hash, Fnv1aKnownValues) {
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(Analyze, TriangleOneTwoThree) {
    const auto r = analyze_command(fixture_json({1, 2, 3}), {});
    ASSERT_EQ(r.exit_code, kExitOk) << r.output;
    const auto j = json::parse(r.output);
    EXPECT_EQ(j["fiber"]["h1"], 7);
    EXPECT_EQ(j["fiber"]["b1_G"], 7);
    EXPECT_EQ(j["fiber"]["b1_Gcheck"], 7);
    EXPECT_EQ(j["fiber"]["genus"], 1);
    EXPECT_EQ(j["orbit"]["codimension"], 2);
    EXPECT_EQ(j["orbit"]["equal"], true);
    EXPECT_EQ(j["orbit"]["holds"], true);
    EXPECT_EQ(j["tangent"]["kernel_dim"], 3);
    EXPECT_EQ(j["face_count"], 1);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_FALSE(j.contains("timings_ms"));
}

TEST(Analyze, TriangleOnes) {
    const auto j = json::parse(analyze_command(fixture_json({1, 1, 1}), {}).output);
    EXPECT_EQ(j["fiber"]["h1"], 4);
    EXPECT_EQ(j["fiber"]["genus"], 1);
}

TEST(Analyze, NonCoprimeSkipsTheOrbit) {
    const auto r = analyze_command(fixture_json({2, 4, 3}), {});
    EXPECT_EQ(r.exit_code, kExitOk);
    const auto j = json::parse(r.output);
    EXPECT_EQ(j["fiber"]["h1"], 10);
    EXPECT_TRUE(j["orbit"].contains("skipped"));
}

TEST(Analyze, InputErrorsExitOne) {
    const std::string common_divisor = R"({"lines": [[1,0,0],[0,1,0],[1,1,-1]], "multiplicities": [2,4,6]})";
    EXPECT_EQ(analyze_command(common_divisor, {}).exit_code, kExitInput);
    EXPECT_EQ(analyze_command("not json", {}).exit_code, kExitInput);
    // three concurrent lines
    EXPECT_EQ(analyze_command(R"({"lines": [[1,0,0],[0,1,0],[1,1,0]], "multiplicities": [1,1,1]})", {}).exit_code,
              kExitInput);
    const auto j = json::parse(analyze_command(common_divisor, {}).output);
    EXPECT_EQ(j["status"], "input_error");
    EXPECT_EQ(j["validation"]["kind"], "common_divisor");
}

TEST(Analyze, ReproducibleAndHashed) {
    const auto a = analyze_command(fixture_json({2, 3, 5, 7}), {});
    const auto b = analyze_command(fixture_json({2, 3, 5, 7}), {});
    EXPECT_EQ(a.output, b.output);
    const auto j = json::parse(a.output);
    EXPECT_EQ(j["input_hash"], hex64(fnv1a(fixture_json({2, 3, 5, 7}))));
    RunOptions timed;
    timed.timings = true;
    EXPECT_TRUE(json::parse(analyze_command(fixture_json({2, 3, 5, 7}), timed).output).contains("timings_ms"));
}

TEST(Commands, OrbitTangentMelnikov) {
    EXPECT_EQ(orbit_command(fixture_json({1, 2, 3, 4})).exit_code, kExitInput);
    const auto o = json::parse(orbit_command(fixture_json({1, 2, 3})).output);
    EXPECT_EQ(o["orbit_dim"], 5);
    const auto t = json::parse(tangent_command(fixture_json({1, 2, 3}), std::nullopt).output);
    EXPECT_EQ(t["image_dim"], 9);
    const std::string dy = R"({"degree": 2, "coefficients": [1,0,0,0,0,0, 0,0,0,0,0,0]})";
    const auto tm = json::parse(tangent_command(fixture_json({1, 2, 3}), dy).output);
    EXPECT_EQ(tm["member"], false);
    const auto m = melnikov_command(fixture_json({1, 2, 3}), {0, std::nullopt, dy}, {});
    ASSERT_EQ(m.exit_code, kExitOk) << m.output;
    EXPECT_EQ(json::parse(m.output)["verdict"], "non-vanishing");
    EXPECT_EQ(melnikov_command(fixture_json({1, 2, 3}), {0, 1.0, dy}, {}).exit_code, kExitInput);
}

TEST(Commands, QuadraticAndLocalModel) {
    const auto p = quadratic_point_command({"1", "1", "1", "0", "0", "0"});
    EXPECT_EQ(p.exit_code, kExitOk);
    EXPECT_EQ(json::parse(p.output)["g2"], "1");
    EXPECT_EQ(quadratic_point_command({"1", "x", "1", "0", "0", "0"}).exit_code, kExitInput);
    EXPECT_EQ(quadratic_verify_command(1).exit_code, kExitOk);
    const auto lm = local_model_command(6, 9);
    EXPECT_EQ(lm.exit_code, kExitOk);
    EXPECT_EQ(json::parse(lm.output)["iterate_adds_one_turn"], true);
    EXPECT_EQ(local_model_command(0, 3).exit_code, kExitInput);
}

TEST(Svg, CountsInMetadata) {
    const auto gc = render_graph_command(fixture_json({1, 1, 1}), GraphModel::Gcheck);
    ASSERT_EQ(gc.exit_code, kExitOk);
    EXPECT_EQ(svg_attribute(gc.output, "data-vertices"), 3);
    EXPECT_EQ(svg_attribute(gc.output, "data-loops"), 3);
    EXPECT_EQ(svg_attribute(gc.output, "data-segment-edges"), 3);
    const auto g = render_graph_command(fixture_json({1, 2, 3, 4}), GraphModel::G);
    EXPECT_EQ(svg_attribute(g.output, "data-vertices"), 17);
    EXPECT_EQ(svg_attribute(g.output, "data-edges"), 37);
    EXPECT_EQ(g.output, render_graph_command(fixture_json({1, 2, 3, 4}), GraphModel::G).output);
    EXPECT_EQ(g.output.rfind("<svg", 0) == 0 || g.output.rfind("<?xml", 0) == 0, true);
}

TEST(Corpus, DeterministicAcrossThreadCounts) {
    CorpusOptions c;
    c.count = 12;
    RunOptions one;
    one.seed = 7;
    RunOptions four = one;
    four.threads = 4;
    const auto a = corpus_command(c, one);
    const auto b = corpus_command(c, four);
    EXPECT_EQ(a.exit_code, kExitOk) << a.output;
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(a.output, corpus_command(c, one).output);
    RunOptions other = one;
    other.seed = 8;
    EXPECT_NE(a.output, corpus_command(c, other).output);
}

TEST(Corpus, BadCaseIsIsolated) {
    const auto dir = std::filesystem::temp_directory_path() / "centerkit_corpus_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "a_good.json") << fixture_json({1, 2, 3});
    std::ofstream(dir / "b_bad.json") << R"({"lines": [[1, 0]], "multiplicities": [1]})";
    std::ofstream(dir / "c_good.json") << fixture_json({1, 1, 1, 1});
    std::ofstream(dir / "ignored.txt") << "x";
    CorpusOptions c;
    c.directory = dir;
    const auto r = corpus_command(c, {});
    EXPECT_NE(r.exit_code, kExitOk);
    const auto j = json::parse(r.output);
    ASSERT_TRUE(j.contains("cases"));
    const auto& rows = j["cases"];
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0]["id"], "a_good.json");
    EXPECT_EQ(rows[0]["exit_code"], 0);
    EXPECT_EQ(rows[1]["exit_code"], kExitInput);
    EXPECT_EQ(rows[2]["exit_code"], 0);
    std::filesystem::remove_all(dir);
}

}  // namespace
