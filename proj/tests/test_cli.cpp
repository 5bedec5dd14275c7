#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "models.hpp"
#include "tannaka/cli.hpp"

using namespace tannaka;
namespace fs = std::filesystem;

namespace {

std::string model(const std::string& name) { return std::string(TANNAKA_MODELS_DIR) + "/" + name; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

json without_timing(json r) {
  r.erase("timing");
  return r;
}

const json* find_check(const json& report, const std::string& id) {
  for (const auto& c : report["checks"]) {
    if (c["id"] == id) return &c;
  }
  return nullptr;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "tannaka_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(TANNAKA_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("shipped model files match the fixtures") {
  for (const auto& [name, doc] : fixtures::model_files()) {
    CAPTURE(name);
    REQUIRE(fs::exists(model(name)));
    CHECK(read_json(model(name)) == doc);
  }
}

TEST_CASE("parsing") {
  ModelDocument m = parse_model_file(model("comatrix_f5.json"));
  REQUIRE(m.functor);
  CHECK(m.functor->domain().size() == 1);
  CHECK(m.functor->domain().hom(0, 0).free_rank() == 1);

  try {
    parse_model_file(model("bad_shape.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "functor.morphisms[0].images[0][0]");
  }
  try {
    parse_model_file(model("bad_modulus.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "ring.modulus");
  }
  CHECK_THROWS_AS(parse_model_file(model("unsupported_ring.json")), UnsupportedError);

  json doc = read_json(model("comatrix_f5.json"));
  SUBCASE("residues must be canonical") {
    doc["functor"]["morphisms"][0]["images"][0][0][0] = 7;
    CHECK_THROWS_AS(parse_model(doc), ParseError);
  }
  SUBCASE("labels must resolve") {
    doc["category"]["identities"][0]["object"] = "Z";
    try {
      parse_model(doc);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.path() == "category.identities[0].object");
    }
  }
  SUBCASE("unknown sections") {
    doc["extra"] = 1;
    CHECK_THROWS_AS(parse_model(doc), ParseError);
  }
  SUBCASE("rationals as strings") {
    json q{{"ring", {{"kind", "Rationals"}}},
           {"coalgebroid",
            {{"ambient", 1}, {"s_action", {{{1}}}}, {"t_action", {{{1}}}}, {"delta", {{"1/2"}}}, {"eps", {{"-3/4"}}}}}};
    ModelDocument d = parse_model(q);
    CHECK(d.coalgebroid->delta.at(0, 0) == Value(1, 2));
    CHECK(serialize_model(d) == q);
  }
}

TEST_CASE("serialization round-trips") {
  for (const auto& [name, doc] : fixtures::model_files()) {
    if (name.rfind("bad_", 0) == 0 || name.rfind("unsupported", 0) == 0 || name.rfind("fl_", 0) == 0) continue;
    CAPTURE(name);
    CHECK(serialize_model(parse_model(doc)) == doc);
  }
  ModelDocument fl = parse_model_file(model("fl_twists_p3n2.json"));
  CHECK(parse_model(serialize_model(fl)).fl->objects.size() == 3);
}

TEST_CASE("reconstruct") {
  const fs::path out = scratch("comatrix_export.json");
  RunResult r = run_file("reconstruct", model("comatrix_f5.json"), {out.string()});
  CHECK(r.exit_code == exit_pass);
  CHECK(r.report["results"]["carrier"]["free_rank"] == 4);
  CHECK((*find_check(r.report, "coalgebroid"))["verdict"] == "pass");
  RunResult again = run_file("check", out.string(), {});
  CHECK(again.exit_code == exit_pass);
  CHECK(find_check(again.report, "coalgebroid"));

  SUBCASE("Hopf pipeline exports a checked bialgebroid") {
    const fs::path hopf = scratch("c2_export.json");
    RunResult h = run_file("reconstruct", model("c2_lines_f3.json"), {hopf.string()});
    CHECK(h.exit_code == exit_pass);
    CHECK(h.report["results"]["fusion"]["hopf"] == true);
    RunResult chk = run_file("check", hopf.string(), {});
    CHECK(chk.exit_code == exit_pass);
    CHECK(find_check(chk.report, "bialgebroid"));
    CHECK(find_check(chk.report, "antipode"));
  }
  SUBCASE("non-Hopf is a result, not a failure") {
    RunResult h = run_file("reconstruct", model("idempotent_f3.json"), {});
    CHECK(h.exit_code == exit_pass);
    CHECK(h.report["results"]["fusion"]["hopf"] == false);
    CHECK(h.report["results"]["fusion"].contains("right_kernel"));
  }
  SUBCASE("pair groupoid") {
    RunResult h = run_file("reconstruct", model("pair_groupoid_f3.json"), {});
    CHECK(h.exit_code == exit_pass);
    CHECK(h.report["results"]["fusion"]["hopf"] == true);
  }
  SUBCASE("determinism") {
    RunResult a = run_file("reconstruct", model("c3_lines_f2.json"), {});
    RunResult b = run_file("reconstruct", model("c3_lines_f2.json"), {});
    CHECK(without_timing(a.report).dump() == without_timing(b.report).dump());
  }
}

TEST_CASE("check") {
  RunResult r = run_file("check", model("broken_pentagon_f5.json"), {});
  CHECK(r.exit_code == exit_failure);
  const json* mon = find_check(r.report, "monoidal");
  REQUIRE(mon);
  bool cited = false;
  for (const auto& v : (*mon)["violations"]) {
    if (v["check"] == "monoidal.pentagon" && v["witness"]["objects"] == json::array({"-", "-", "-", "-"})) cited = true;
  }
  CHECK(cited);
  CHECK(run_file("check", model("c2_lines_f3.json"), {}).exit_code == exit_pass);
  CHECK(run_file("check", model("grouplike_two_lines.json"), {}).exit_code == exit_pass);
  CHECK(run_file("check", model("bad_shape.json"), {}).exit_code == exit_parse);
  CHECK(run_file("check", model("unsupported_ring.json"), {}).exit_code == exit_unsupported);
  CHECK(run_file("check", model("missing.json"), {}).exit_code == exit_parse);
}

TEST_CASE("counit") {
  RunResult two = run_file("counit", model("grouplike_two_lines.json"), {});
  CHECK(two.exit_code == exit_pass);
  CHECK(two.report["results"]["counit"]["verdict"] == "iso");
  RunResult one = run_file("counit", model("grouplike_one_line.json"), {});
  CHECK(one.exit_code == exit_failure);
  CHECK(one.report["results"]["counit"]["verdict"] == "not_epi");
  CHECK(one.report["results"]["counit"]["witness"] == json::array({json::array({0, 1})}));
  CHECK(run_file("counit", model("comatrix_f5.json"), {}).exit_code == exit_parse);
}

TEST_CASE("recognize") {
  RunResult ok = run_file("recognize", model("c2_biproduct_f2.json"), {});
  CHECK((*find_check(ok.report, "condition_i"))["verdict"] == "pass");
  CHECK((*find_check(ok.report, "condition_ii"))["verdict"] == "pass");
  CHECK(ok.exit_code == exit_pass);
  RunResult bad = run_file("recognize", model("c2_lines_f2.json"), {});
  CHECK(bad.exit_code == exit_failure);
  CHECK((*find_check(bad.report, "condition_ii"))["verdict"] == "fail");
  RunResult zl = run_file("recognize", model("zero_line_f2.json"), {});
  CHECK(zl.exit_code == exit_pass);
  CHECK(zl.report["verdict"] == "pass");
  RunResult small = run_file("recognize", model("c2_biproduct_f2.json"), {std::nullopt, 2});
  CHECK((*find_check(small.report, "condition_ii"))["verdict"] == "unverified");
}

TEST_CASE("fl") {
  const fs::path out = scratch("fl_export.json");
  RunResult r = run_file("fl", model("fl_twists.json"), {out.string(), default_search_bound, 2, 1});
  CHECK(r.exit_code == exit_pass);
  CHECK(r.report["results"]["L"]["free_rank"] == 2);
  CHECK(r.report["results"]["L"]["free_source"] == true);
  CHECK(r.report["results"]["L"]["free_target"] == true);
  for (const auto& h : r.report["results"]["homs"]) CHECK(h["cardinality"] == (h["from"] == h["to"] ? "2" : "1"));
  CHECK(run_file("check", out.string(), {}).exit_code == exit_pass);
  CHECK(run_file("reconstruct", out.string(), {}).exit_code == exit_pass);

  CHECK(run_file("fl", model("fl_twists.json"), {}).exit_code == exit_parse);
  RunResult z9 = run_file("fl", model("fl_twists_p3n2.json"), {});
  CHECK(z9.exit_code == exit_pass);
  bool squared = false;
  for (const auto& t : z9.report["results"]["tensors"]) {
    if (t["left"] == "M(1)" && t["right"] == "M(1)") squared = t["isomorphic_to"] == "M(2)";
  }
  CHECK(squared);
}

TEST_CASE("basechange") {
  const fs::path out = scratch("z2_export.json");
  RunResult r = run_file("basechange", model("comatrix_z4.json"), {out.string()});
  CHECK(r.exit_code == exit_pass);
  CHECK((*find_check(r.report, "comparison"))["verdict"] == "pass");
  ModelDocument moved = parse_model_file(out.string());
  CHECK(moved.ring == Ring::integers_mod(2));
  CHECK(run_file("check", out.string(), {}).exit_code == exit_pass);
  RunResult q = run_file("basechange", model("comatrix_f5.json"), {std::nullopt, default_search_bound, 2, 1});
  CHECK(q.exit_code == exit_unsupported);
}

TEST_CASE("binary exit codes") {
  const std::string report = scratch("report.json").string();
  CHECK(run_binary("reconstruct " + model("comatrix_f5.json") + " --report " + report) == 0);
  CHECK(read_json(report)["results"]["carrier"]["free_rank"] == 4);
  CHECK(run_binary("check " + model("broken_pentagon_f5.json")) == 1);
  CHECK(run_binary("check " + model("bad_shape.json")) == 2);
  CHECK(run_binary("check " + model("unsupported_ring.json")) == 3);
  CHECK(run_binary("fl " + model("fl_twists.json") + " --p 2 --n 1") == 0);
  CHECK(run_binary("recognize " + model("c2_lines_f2.json") + " --bound 100") == 1);
  CHECK(run_binary("frobnicate " + model("comatrix_f5.json")) == 2);
}
