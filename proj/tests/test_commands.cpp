#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "asphere/commands.hpp"
#include "support.hpp"

using namespace asphere;
using namespace asphere::cli;
using namespace asphere::testing;

namespace {

  std::string temp_file(std::string const& name, std::string const& contents = "") {
    auto const path = std::filesystem::temp_directory_path() / ("asphere_test_" + name);
    if (!contents.empty()) {
      std::ofstream(path) << contents;
    }
    return path.string();
  }

}  // namespace

TEST_CASE("check") {
  RunReport r = cmd_check(fixture_path("trivial.pres"), {});
  CHECK(r.exit_code == ExitCode::ok);
  CHECK(r.findings["unimodular"] == true);
  CHECK(r.findings["homologically_contractible"] == true);

  r = cmd_check(fixture_path("ab2.pres"), {});
  CHECK(r.exit_code == ExitCode::ok);
  CHECK(r.findings["unimodular"] == true);
  CHECK(r.findings["homology_trivial_unit"] == false);
  CHECK(r.warnings == std::vector<std::string>{"group triviality assumed, not verified"});

  r = cmd_check(fixture_path("x2.pres"), {});
  CHECK(r.exit_code == ExitCode::check_failed);
  CHECK(r.findings["snf_diagonal"] == json::array({2}));

  r = cmd_check(temp_file("bad.pres", "gens: 1\nrel r: g0^\n"), {});
  CHECK(r.exit_code == ExitCode::usage_error);
  CHECK(r.findings["error"]["kind"] == "ParseError");
  CHECK(r.findings["error"]["line"] == 2);
  CHECK(r.findings["error"]["column"] == 8);

  r = cmd_check("/nonexistent/file.pres", {});
  CHECK(r.exit_code == ExitCode::usage_error);
}

TEST_CASE("reports embed tool, config and digests") {
  Options opts;
  opts.seed = 17;
  json const j = cmd_check("fuzz:3", opts).to_json();
  CHECK(j["tool"] == tool_name);
  CHECK(j["version"] == tool_version);
  CHECK(j["config"]["seed"] == 17);
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(sha256_hex("abc")
        == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("normalize then check") {
  Options opts;
  opts.out       = temp_file("ab2_normal.pres");
  RunReport const n = cmd_normalize(fixture_path("ab2.pres"), opts);
  CHECK(n.exit_code == ExitCode::ok);
  CHECK(n.findings["exponent_check"] == true);
  CHECK(n.findings["round_trip"] == true);
  CHECK(std::filesystem::exists(opts.out + ".basechange.json"));
  RunReport const c = cmd_check(opts.out, {});
  CHECK(c.findings["homology_trivial_unit"] == true);

  RunReport const same = cmd_normalize(fixture_path("commutator.pres"), {});
  CHECK(same.findings["moves"] == 0);

  RunReport const bad = cmd_normalize(fixture_path("x2.pres"), {});
  CHECK(bad.exit_code == ExitCode::check_failed);
  CHECK(bad.findings["snf_diagonal"] == json::array({2}));
}

TEST_CASE("ribbon and sublinks") {
  Options opts;
  opts.out           = temp_file("code.json");
  RunReport const rb = cmd_ribbon(fixture_path("commutator.pres"), opts);
  CHECK(rb.exit_code == ExitCode::ok);
  CHECK(rb.findings["meridian_correspondence"] == true);
  CHECK(cmd_ribbon(fixture_path("ab2.pres"), {}).exit_code == ExitCode::check_failed);
  Options norm;
  norm.normalize_first = true;
  CHECK(cmd_ribbon(fixture_path("ab2.pres"), norm).exit_code == ExitCode::ok);

  Options none;
  none.fill          = "";
  RunReport const fs = cmd_sublinks(opts.out, none);
  CHECK(fs.exit_code == ExitCode::ok);
  CHECK(fs.findings["selections"][0]["homology"]["H1"]["rank"] == 2);

  Options full;
  full.fill          = "1,2";
  RunReport const ff = cmd_sublinks(opts.out, full);
  CHECK(ff.findings["selections"][0]["homologically_contractible"] == true);
  CHECK(ff.findings["selections"][0]["matches_subcomplex"] == true);

  Options all;
  all.enumerate      = true;
  RunReport const en = cmd_sublinks(fixture_path("three.pres"), all);
  CHECK(en.findings["count"] == 8);
  CHECK(en.findings["all_match"] == true);

  all.cap = 2;
  CHECK(cmd_sublinks(fixture_path("three.pres"), all).exit_code == ExitCode::usage_error);
  all.force = true;
  CHECK(cmd_sublinks(fixture_path("three.pres"), all).exit_code == ExitCode::ok);

  CHECK(cmd_sublinks(fixture_path("three.pres"), {}).exit_code == ExitCode::usage_error);
  Options out_of_range;
  out_of_range.fill = "4";
  CHECK(cmd_sublinks(fixture_path("three.pres"), out_of_range).exit_code
        == ExitCode::check_failed);
}

TEST_CASE("homology, telescope and pi2probe") {
  RunReport h = cmd_homology(fixture_path("torus.pres"), {});
  CHECK(h.findings["homology"]["H2"] == 1);
  std::string const mat = temp_file("m.json", R"({"rows": 1, "cols": 1, "entries": [[1, 1, 3]]})");
  h = cmd_homology(mat, {});
  CHECK(h.findings["source"] == "matrix");
  CHECK(h.findings["homology"]["H1"]["torsion"] == json::array({3}));

  Options stages;
  stages.stages = {"1,2:1", "*:1,2"};
  RunReport const t = cmd_telescope(fixture_path("three.pres"), stages);
  CHECK(t.exit_code == ExitCode::ok);
  CHECK(t.findings["homology_equal"] == true);
  CHECK(t.warnings.size() == 1);
  CHECK(t.findings["collars"].size() == 2);

  Options dangling;
  dangling.stages = {"1:1"};
  CHECK(cmd_telescope(fixture_path("three.pres"), dangling).exit_code
        == ExitCode::check_failed);

  RunReport const p = cmd_pi2probe(fixture_path("x2.pres"), {});
  CHECK(p.findings["verdict"] == "NotAspherical");
  CHECK(p.findings["kernel_rank"] == 1);
}

TEST_CASE("commands are deterministic") {
  Options opts;
  opts.enumerate = true;
  opts.seed      = 4;
  for (auto const& name : command_names()) {
    for (std::string const input : {fixture_path("commutator.pres"), std::string("fuzz:3")}) {
      std::string const first  = run_command(name, input, opts).to_json().dump();
      std::string const second = run_command(name, input, opts).to_json().dump();
      CHECK(first == second);
    }
  }
  CHECK(run_command("nope", "x", opts).exit_code == ExitCode::usage_error);
}
