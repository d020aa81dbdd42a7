#include <doctest.h>

#include "lspath/fixtures.hpp"
#include "lspath/json_io.hpp"

using namespace lsp;

TEST_CASE("rational strings") {
  CHECK(rat_to_string(frac(4, 6)) == "2/3");
  CHECK(rat_to_string(Rational(5)) == "5");
  CHECK(rat_to_string(frac(-3, 9)) == "-1/3");
  CHECK(rat_from_string("2/3") == frac(2, 3));
  CHECK(rat_from_string("7") == Rational(7));
  CHECK(rat_from_string("-4/2") == Rational(-2));
  CHECK_THROWS_WITH_AS(rat_from_string("a/b"), doctest::Contains("parse-error"), Error);
  CHECK_THROWS_WITH_AS(rat_from_string(""), doctest::Contains("parse-error"), Error);
}

TEST_CASE("poset json round trip with default bonds") {
  Json j = {{"elements", {"a", "b", "c"}},
            {"covers", {{{"lower", "a"}, {"upper", "b"}}, {{"lower", "b"}, {"upper", "c"}, {"bond", 4}}}}};
  auto p = poset_from_json(j);
  CHECK(p.size() == 3);
  CHECK(p.up_covers(p.index_of("a"))[0].second == 1);  // omitted bond defaults to 1
  CHECK(p.up_covers(p.index_of("b"))[0].second == 4);

  auto back = poset_from_json(poset_to_json(p));
  CHECK(back.labels() == p.labels());
  CHECK(back.cover_specs().size() == p.cover_specs().size());
}

TEST_CASE("path json round trip") {
  auto p = fixtures::chain4_121();
  Json j = {{"degree", 1}, {"values", {{"x", "1/2"}, {"y", "1/2"}}}};
  auto path = path_from_json(p, j);
  CHECK(path.degree == 1);
  CHECK(path.values.at(p.index_of("x")) == frac(1, 2));
  auto j2 = path_to_json(p, path);
  CHECK(path_from_json(p, j2) == path);

  Json bad = {{"degree", 1}, {"values", {{"e", "1/2"}, {"x", "1/2"}}}};
  CHECK_THROWS_WITH_AS(path_from_json(p, bad), doctest::Contains("not-an-ls-path"), Error);
  Json unknown = {{"degree", 1}, {"values", {{"nope", "1"}}}};
  CHECK_THROWS_WITH_AS(path_from_json(p, unknown), doctest::Contains("unknown-element"), Error);
}

TEST_CASE("element and table json") {
  auto p = fixtures::i24();
  Json ej = {{"terms",
              {{{"coeff", "2/3"}, {"path", {{"degree", 1}, {"values", {{"13", "1"}}}}}},
               {{"coeff", "-1"}, {"path", {{"degree", 1}, {"values", {{"24", "1"}}}}}}}}};
  auto x = element_from_json(p, ej);
  CHECK(x.terms().size() == 2);
  CHECK(element_from_json(p, element_to_json(p, x)) == x);

  Json tj = Json::array();
  tj.push_back(
      {{"lhs",
        {{{"degree", 1}, {"values", {{"14", "1"}}}}, {{"degree", 1}, {"values", {{"23", "1"}}}}}},
       {"rhs",
        {{{"coeff", "1"},
          {"monomial",
           {{{"degree", 1}, {"values", {{"13", "1"}}}},
            {{"degree", 1}, {"values", {{"24", "1"}}}}}}}}}});
  auto table = table_from_json(p, tj);
  REQUIRE(table.entries.size() == 1);
  CHECK(table.entries[0].rhs.size() == 1);
  auto back = table_to_json(p, table);
  CHECK(table_from_json(p, back).entries.size() == 1);
}

TEST_CASE("deterministic serialization") {
  auto p = fixtures::i24();
  CHECK(poset_to_json(p).dump() == poset_to_json(fixtures::i24()).dump());
}

// ---- CLI integration -------------------------------------------------------

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(LSPATH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/lspath_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cli: poset check and failure modes") {
  auto p = fixtures::i24();
  std::string good = write_temp("i24.json", poset_to_json(p).dump());
  auto ok = run_cli("poset-check --poset " + good);
  CHECK(ok.exit_code == 0);
  auto doc = Json::parse(ok.output);
  CHECK(doc.at("ok") == true);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("maximal_chains") == 2);

  std::string bad = write_temp("bad_diamond.json", poset_to_json(fixtures::diamond_bad()).dump());
  auto fail = run_cli("poset-check --poset " + bad);
  CHECK(fail.exit_code == 1);
  auto err = Json::parse(fail.output);
  CHECK(err.at("error").at("kind") == "gcd-condition");
}

TEST_CASE("cli: path enumeration is deterministic") {
  std::string file = write_temp("i24b.json", poset_to_json(fixtures::i24()).dump());
  auto first = run_cli("paths-enum --poset " + file + " --degree 2");
  auto second = run_cli("paths-enum --poset " + file + " --degree 2");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  auto doc = Json::parse(first.output);
  CHECK(doc.at("count") == 20);
  CHECK(doc.at("paths").size() == 20);
}

TEST_CASE("cli: order comparison") {
  std::string poset = write_temp("i24c.json", poset_to_json(fixtures::i24()).dump());
  std::string lhs = write_temp("lhs.json", R"({"values": {"13": "1", "24": "1"}})");
  std::string rhs = write_temp("rhs.json", R"({"values": {"12": "1", "34": "1"}})");
  auto res = run_cli("order-compare --poset " + poset + " --lhs " + lhs + " --rhs " + rhs);
  CHECK(res.exit_code == 0);
  auto doc = Json::parse(res.output);
  CHECK(doc.at("rlex") == "LT");
  CHECK(doc.at("triangle") == "LT");
}

TEST_CASE("cli: schubert emits a poset file") {
  std::string out = "/tmp/lspath_test_schubert.json";
  auto res = run_cli("schubert --type A3 --weight 0,1,0 --emit " + out);
  CHECK(res.exit_code == 0);
  auto emitted = poset_from_json(load_json_file(out));
  CHECK(emitted.size() == 6);
  CHECK(emitted.top_length() == 4);
}

TEST_CASE("cli: acceptance criterion with a corrupted table fails by name") {
  auto p = fixtures::i24();
  // 14*23 -> 12*34 only: axiom-clean but wrong in the ring
  Json table = Json::array();
  table.push_back(
      {{"lhs",
        {{{"degree", 1}, {"values", {{"14", "1"}}}}, {{"degree", 1}, {"values", {{"23", "1"}}}}}},
       {"rhs",
        {{{"coeff", "1"},
          {"monomial",
           {{{"degree", 1}, {"values", {{"12", "1"}}}},
            {{"degree", 1}, {"values", {{"34", "1"}}}}}}}}}});
  std::string file = write_temp("corrupt_table.json", table.dump());
  auto res = run_cli("acceptance --only 3 --table-override " + file);
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("FAIL criterion-3") != std::string::npos);

  auto good = run_cli("acceptance --only 3");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("PASS criterion-3") != std::string::npos);
}

TEST_CASE("cli: quick acceptance subset passes") {
  auto res = run_cli("acceptance --quick --only 8");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("PASS criterion-8") != std::string::npos);
}
