#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "polyflat/commands.hpp"

using namespace polyflat;

namespace {

std::string dump_all(const std::vector<Certificate>& certs) {
  std::string out;
  for (const auto& c : certs) out += to_json(c).dump() + '\n';
  return out;
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("exit codes") {
  Certificate c;
  c.verdict = Verdict::verified;
  CHECK(exit_code(c) == 0);
  c.verdict = Verdict::witness_found;
  CHECK(exit_code(c) == 0);
  c.verdict = Verdict::refuted;
  CHECK(exit_code(c) == 1);
  c.verdict = Verdict::exhausted_no_witness;
  CHECK(exit_code(c) == 1);
  CHECK(exit_code(Certificate::failure("x", {}, "unknown_claim", "")) == 2);
  CHECK(exit_code(Certificate::failure("x", {}, "internal", "")) == 3);
}

TEST_CASE("classify") {
  const auto certs = cmd_classify(30);
  REQUIRE(certs.size() == 29);
  CHECK(certs.back().claim == "prop5.classify");
  CHECK(certs.back().verdict == Verdict::verified);
  CHECK(certs.back().payload["flat_set"] == std::vector<unsigned>{3, 4, 6, 8, 12, 24});
  CHECK(cmd_classify(3).back().payload["flat_set"] == std::vector<unsigned>{3});
  const auto bad = cmd_classify(2);
  REQUIRE(bad.size() == 1);
  CHECK(exit_code(bad.front()) == 2);
  CHECK(dump_all(cmd_classify(40, {1, {}})) == dump_all(cmd_classify(40, {4, {}})));
}

TEST_CASE("verify dispatch") {
  CHECK(cmd_verify("lemma", {"5", "25", "10", "5"}).payload["galois_class"] == "C4");
  CHECK(cmd_verify("prop4", {"7"}).verdict == Verdict::verified);
  CHECK(cmd_verify("prop1", {"10", "5"}).verdict == Verdict::verified);
  CHECK(cmd_verify("prop2", {"2", "3", "5/4"}).verdict == Verdict::verified);
  CHECK(cmd_verify("prop3", {"16"}).verdict == Verdict::verified);
  const Certificate area = cmd_verify("area-formula", {"6"});
  CHECK(area.verdict == Verdict::verified);
  CHECK(area.payload["min_poly"]["text"] == "x^2 - 27/4");
  CHECK(cmd_verify("area-identity", {"5", "2", "0"}).verdict == Verdict::verified);
  const Certificate seeded = cmd_verify("area-identity", {"7"});
  CHECK(seeded.verdict == Verdict::verified);
  CHECK(seeded.payload["passed"] == 20);
  CHECK(cmd_verify("heron", {"3", "4", "5"}).payload["area"] == "6");
  CHECK(cmd_verify("heron", {"1", "1", "1"}).payload["area"] == "1/4*sqrt(3)");
  CHECK(cmd_verify("remark", {"7"}).payload["power_of_two"] == false);
  CHECK(cmd_verify("remark", {"15"}).payload["degree"] == 8);

  CHECK(cmd_verify("prop9", {}).reason() == "unknown_claim");
  CHECK(cmd_verify("prop1", {"10"}).reason() == "malformed_args");
  CHECK(cmd_verify("prop1", {"ten", "5"}).reason() == "malformed_args");
  CHECK(cmd_verify("prop1", {"-10", "5"}).reason() == "malformed_args");
  CHECK(cmd_verify("lemma", {"5", "25", "10", "4"}).reason() == "hypothesis_failed");
  CHECK(cmd_verify("heron", {"1", "1", "3"}).reason() == "triangle_inequality");
  CHECK(cmd_verify("area-identity", {"2"}).reason() == "bad_argument");
  for (const auto& [claim, args] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"prop9", {}}, {"lemma", {"5", "25", "10", "4"}}, {"heron", {"1", "1", "3"}}}) {
    CHECK(exit_code(cmd_verify(claim, args)) == 2);
  }
}

TEST_CASE("refute") {
  const Certificate hex = cmd_refute(6, 1, 27);
  CHECK(hex.verdict == Verdict::witness_found);
  CHECK(hex.payload["search"]["witness"][0]["r"] == nlohmann::json{{"num", "27"}, {"den", "4"}});
  CHECK(hex.payload["structural_obstruction"]["applies"] == false);
  const Certificate sq = cmd_refute(4, 1, 1);
  CHECK(sq.verdict == Verdict::witness_found);
  CHECK(sq.payload["search"]["witness"][0]["r"]["num"] == "1");
  const Certificate pent = cmd_refute(5, 2, 4);
  CHECK(pent.verdict == Verdict::exhausted_no_witness);
  CHECK(pent.payload["structural_obstruction"]["applies"] == true);
  CHECK(pent.payload["search"]["target_min_poly"]["text"] == "x^4 - 25/8*x^2 + 125/256");
  CHECK(exit_code(pent) == 1);
  CHECK(cmd_refute(2, 1, 1).reason() == "bad_argument");
  CHECK(to_json(cmd_refute(5, 2, 4, {1, {}})) == to_json(cmd_refute(5, 2, 4, {3, {}})));
}

TEST_CASE("search") {
  const Certificate hex = cmd_search(6, 2, std::nullopt);
  CHECK(hex.verdict == Verdict::witness_found);
  CHECK(hex.payload["hit_count"].get<std::size_t>() >= 1);
  const Certificate sq = cmd_search(4, 8, std::nullopt);
  CHECK(sq.verdict == Verdict::exhausted_no_witness);
  CHECK(sq.payload["hit_count"] == 0);
  const Certificate pent = cmd_search(5, 2, std::nullopt);
  CHECK(pent.reason() == "unsupported_n");
  CHECK(exit_code(pent) == 2);
  CHECK(cmd_search(8, 2, std::nullopt).reason() == "unsupported_n");

  const auto path = std::filesystem::temp_directory_path() / "polyflat_search_test.csv";
  const Certificate tri = cmd_search(3, 2, path.string());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::string first_line;
  std::getline(text, first_line);
  CHECK(first_line == "parameters,distances,n");
  std::size_t rows = 0;
  for (std::string line; std::getline(text, line);) ++rows;
  CHECK(rows == tri.payload["hit_count"].get<std::size_t>());
  std::filesystem::remove(path);
}

}  // TEST_SUITE
