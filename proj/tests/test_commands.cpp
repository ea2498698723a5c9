#include "doctest.h"
#include "ncalg/commands.hpp"

using namespace ncalg;

namespace {

const char* const three_generators = "generators: a b c\na*b - b*a\nb*c - c*b\n";

std::vector<std::string> strings(const nlohmann::json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_CASE("pn-check report") {
  auto r = cmd_pn_check(5, 6);
  CHECK(r.ok);
  CHECK(r.body["schema"] == 1);
  CHECK(r.body["command"] == "pn-check");
  CHECK(r.body["verdict"] == true);
  CHECK(r.body["failures"].empty());
  CHECK(r.body["order"] == "v5>e45>v4>e34>v3>e23>v2>e12>v1");
  CHECK(r.body["normal_word_counts"].size() == 7);
  CHECK(cmd_pn_check(1).ok);
  CHECK_THROWS(cmd_pn_check(0));
}

TEST_CASE("reports are deterministic apart from timing") {
  auto a = cmd_pn_check(4, 5).to_json();
  auto b = cmd_pn_check(4, 5).to_json();
  CHECK(a.contains("timing_us"));
  a.erase("timing_us");
  b.erase("timing_us");
  CHECK(a.dump() == b.dump());
  CHECK(cmd_hilbert(3, 6).body.dump() == cmd_hilbert(3, 6).body.dump());
}

TEST_CASE("hilbert report") {
  auto r = cmd_hilbert(4, 8);
  CHECK(r.ok);
  CHECK(r.body["dual_closed_form"] == nlohmann::json::array({1, 7, 13, 7, 1}));
  CHECK(r.body["dual_by_cliques"] == r.body["dual_closed_form"]);
  CHECK(r.body["hilbert_series"] == r.body["normal_word_counts"]);
  CHECK(cmd_hilbert(2, 5).body["hilbert_series"] == nlohmann::json::array({1, 3, 8, 21, 55, 144}));
  CHECK(cmd_hilbert(1, 4).body["hilbert_series"] == nlohmann::json::array({1, 1, 1, 1, 1}));
  CHECK(cmd_hilbert(16, 3).body["dual_by_cliques"].is_string());
}

TEST_CASE("complete report") {
  auto first = cmd_complete(three_generators, "c>b>a", 6);
  CHECK(first.ok);
  CHECK(strings(first.body["bad_words"]) ==
        std::vector<std::string>{"b*a", "c*b", "c*a*b", "c*a*a*b", "c*a*a*a*b", "c*a*a*a*a*b"});
  CHECK(first.body["confluent"] == false);
  CHECK(first.body["counts_exact_through"] == 6);

  auto second = cmd_complete(three_generators, "b>a>c", 6);
  CHECK(second.ok);
  CHECK(strings(second.body["bad_words"]) == std::vector<std::string>{"b*c", "b*a"});
  CHECK(second.body["initial_ambiguities"] == 0);

  CHECK_THROWS(cmd_complete(three_generators, "c>b>q", 6));
  CHECK_THROWS_AS(cmd_complete("generators: a b\na*b - b*z\n", "b>a", 4), ParseError);
}

TEST_CASE("pgc report") {
  auto ok = cmd_pgc("vertices: a b c\nedge: a b\nedge: b c\n", GraphMode::commuting);
  CHECK(ok.ok);
  CHECK(ok.body["ordering_found"] == true);

  auto c5 = cmd_pgc("vertices: a b c d e\nedge: a b\nedge: b c\nedge: c d\nedge: d e\nedge: e a\n",
                    GraphMode::commuting);
  CHECK_FALSE(c5.ok);
  CHECK(c5.body["message"] == "no ordering found");
}

TEST_CASE("s3 report") {
  auto r = cmd_s3(1, 2, 3);
  CHECK(r.ok);
  CHECK(r.body["dimension"] == 2);
}

TEST_CASE("report-all") {
  auto r = cmd_report_all(1, 5, 8);
  CHECK(r.ok);
  CHECK(r.body["per_n"].size() == 5);
}

TEST_CASE("json integers") {
  CHECK(json_integer(Integer(42)) == 42);
  Integer big = Integer(1) << 80;
  CHECK(json_integer(big) == big.str());
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
}
