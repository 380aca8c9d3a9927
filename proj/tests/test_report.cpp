#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "condlab/errors.hpp"
#include "condlab/report.hpp"

using namespace condlab;

TEST_CASE("reports keep the command, config, result order") {
    nlohmann::ordered_json config;
    config["side"] = 8;
    nlohmann::ordered_json result;
    result["sigma2"] = 1.0;
    const nlohmann::ordered_json doc = make_report("resistance", config, result);

    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys.size() == 3);
    CHECK(keys[0] == "command");
    CHECK(keys[1] == "config");
    CHECK(keys[2] == "result");
    CHECK(doc["command"] == "resistance");
    CHECK(doc["config"]["side"] == 8);

    const std::string text = render_json(doc);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"command\"") < text.find("\"config\""));
    CHECK(text.find("\"config\"") < text.find("\"result\""));
    CHECK(render_json(doc) == text);
}

TEST_CASE("csv numbers round-trip the underlying doubles") {
    const double values[] = {0.0,
                             1.0,
                             -1.0,
                             1.0 / 3.0,
                             0.1,
                             1e-300,
                             2.2250738585072014e-308,
                             4.9406564584124654e-324,
                             1.7976931348623157e308,
                             -123456789.12345679,
                             std::numeric_limits<double>::infinity()};
    for (double v : values) {
        const std::string text = csv_number(v);
        const double back = std::strtod(text.c_str(), nullptr);
        CHECK(back == v);
    }
    CHECK(csv_number(1.0 / 3.0) == "0.33333333333333331");

    const std::string neg_zero = csv_number(-0.0);
    const double back = std::strtod(neg_zero.c_str(), nullptr);
    CHECK(back == 0.0);
    CHECK(std::signbit(back));
}

TEST_CASE("csv emission quotes exactly the fields that need it") {
    const std::vector<std::string> header = {"id", "note", "x"};
    const std::vector<std::vector<std::string>> rows = {
        {"a", "plain", "1"},
        {"b", "has,comma", "2"},
        {"c", "say \"hi\"", "3"},
        {"d", "line\nbreak", "4"}};
    const std::string text = emit_csv(header, rows);
    CHECK(text ==
          "id,note,x\r\n"
          "a,plain,1\r\n"
          "b,\"has,comma\",2\r\n"
          "c,\"say \"\"hi\"\"\",3\r\n"
          "d,\"line\nbreak\",4\r\n");

    CHECK(emit_csv({"only", "two"}, {}) == "only,two\r\n");
    CHECK_THROWS_AS(emit_csv(header, {{"short", "row"}}), std::invalid_argument);
}

TEST_CASE("csv parsing inverts emission") {
    const std::vector<std::string> header = {"id", "note"};
    const std::vector<std::vector<std::string>> rows = {
        {"a", "plain"}, {"b", "with,comma"}, {"c", "multi\r\nline \"x\""}};
    const auto parsed = parse_csv(emit_csv(header, rows));
    REQUIRE(parsed.size() == 4);
    CHECK(parsed[0] == header);
    CHECK(parsed[1] == rows[0]);
    CHECK(parsed[2] == rows[1]);
    CHECK(parsed[3] == rows[2]);
}

TEST_CASE("csv parsing accepts bare line feeds and missing final breaks") {
    const auto lf = parse_csv("a,b\nc,d\n");
    REQUIRE(lf.size() == 2);
    CHECK(lf[0] == std::vector<std::string>{"a", "b"});
    CHECK(lf[1] == std::vector<std::string>{"c", "d"});

    const auto bare = parse_csv("a,b\nc,d");
    REQUIRE(bare.size() == 2);
    CHECK(bare[1] == std::vector<std::string>{"c", "d"});

    CHECK(parse_csv("").empty());

    const auto trailing = parse_csv("a,\n");
    REQUIRE(trailing.size() == 1);
    CHECK(trailing[0] == std::vector<std::string>{"a", ""});

    const auto quoted_empty = parse_csv("\"\"\n");
    REQUIRE(quoted_empty.size() == 1);
    CHECK(quoted_empty[0] == std::vector<std::string>{""});
}

TEST_CASE("text files round-trip bytes and report io failures") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() /
        ("condlab-test-report-" + std::to_string(::getpid()) + ".txt");
    const std::string payload = "x\r\ny\n\"quoted\"";
    write_text_file(path.string(), payload);
    CHECK(read_text_file(path.string()) == payload);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(read_text_file(path.string()), IoError);
    CHECK_THROWS_AS(write_text_file("/no-such-directory-zz/out.txt", "x"), IoError);
}
