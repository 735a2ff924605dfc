#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wonderful/catalog.hpp"
#include "wonderful/cli.hpp"
#include "wonderful/json_io.hpp"
#include "wonderful/render.hpp"

using namespace wonderful;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Outcome r;
  r.status = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string system_text(const SphericalSystem& s) { return to_json(s).dump(); }

const std::string aa11 = R"({"diagram":"A1,A1","sp":[],"sigma":[[[0,1,1],[1,1,1]]]})";

}  // namespace

TEST_CASE("validate") {
  const Outcome ok = run({"validate"}, aa11);
  CHECK(ok.status == cli::exit_ok);
  CHECK(ok.json().at("valid") == true);
  const Outcome bad = run({"validate"}, R"({"diagram":"A3","sp":[],"sigma":[[[0,1,1],[0,2,1]],[[0,1,1],[0,3,1]]]})");
  CHECK(bad.status == cli::exit_ok);
  CHECK(bad.json().at("valid") == false);
  CHECK_FALSE(bad.json().at("violations").empty());
}

TEST_CASE("system from a file") {
  const std::string path = "test_cli_system.json";
  std::ofstream(path) << aa11;
  const Outcome r = run({"classify", "--system", path});
  std::remove(path.c_str());
  CHECK(r.status == cli::exit_ok);
  CHECK(r.json().at("family").at("label") == "aa(1,1)");
  CHECK(run({"classify", "--system", "does-not-exist.json"}).status == cli::exit_domain_error);
}

TEST_CASE("colours, quotient, localize and components") {
  const std::string ac3 = system_text(instantiate("ac∗(n)", {3}));
  const Outcome cs = run({"colours"}, ac3);
  REQUIRE(cs.status == cli::exit_ok);
  CHECK(cs.json().at("colours").size() == 3);
  const Outcome q = run({"quotient", "--colours", "D2"}, ac3);
  CHECK(q.status == cli::exit_ok);
  CHECK(run({"quotient", "--colours", "D1"}, ac3).status == cli::exit_domain_error);
  CHECK(run({"quotient", "--colours", "D9"}, ac3).status == cli::exit_domain_error);
  const Outcome loc = run({"localize", "--nodes", "1,2"}, ac3);
  REQUIRE(loc.status == cli::exit_ok);
  CHECK(loc.json().at("system").at("sigma").size() == 1);
  const Outcome comps = run({"components", "--classify"}, system_text(instantiate("b∗(4)+b∗∗(3)", {})));
  REQUIRE(comps.status == cli::exit_ok);
  CHECK(comps.json().is_array());
  CHECK(comps.json().size() == 2);
}

TEST_CASE("enumerate G2 primitive gives four systems") {
  const Outcome r = run({"enumerate", "--diagram", "G2", "--primitive", "--classify"});
  REQUIRE(r.status == cli::exit_ok);
  CHECK(r.json().size() == 4);
  const Outcome tight = run({"enumerate", "--diagram", "B4", "--budget", "5"});
  CHECK(tight.status == cli::exit_domain_error);
  CHECK(tight.json().at("error").at("kind") == "budget");
}

TEST_CASE("diagram text and svg") {
  const SphericalSystem fd = instantiate("fd(4)", {});
  const Outcome text = run({"diagram"}, system_text(fd));
  CHECK(text.status == cli::exit_ok);
  CHECK(text.out == render_text(fd));
  const Outcome svg = run({"diagram", "--format", "svg"}, system_text(fd));
  CHECK(svg.out == render_svg(fd));
  CHECK(run({"diagram", "--format", "png"}, system_text(fd)).status == cli::exit_usage_error);
}

TEST_CASE("catalog tables") {
  const Outcome fams = run({"catalog", "families"});
  REQUIRE(fams.status == cli::exit_ok);
  CHECK(fams.json().size() == 66);
  const Outcome inst = run({"catalog", "families", "--label", "ac*(p)+b'(q)", "--params", "3,2"});
  REQUIRE(inst.status == cli::exit_ok);
  const Outcome rank1 = run({"catalog", "rank1"});
  REQUIRE(rank1.status == cli::exit_ok);
  CHECK(rank1.json().size() == 15);
  CHECK(run({"catalog", "families", "--label", "zz(n)"}).status == cli::exit_domain_error);
}

TEST_CASE("symmetric and orbit") {
  const Outcome g = run({"symmetric", "--label", "G"});
  REQUIRE(g.status == cli::exit_ok);
  const Outcome o = run({"orbit", "--diagram", "G2", "--char", "1,0"});
  REQUIRE(o.status == cli::exit_ok);
  CHECK(o.json().at("height") == 3);
  CHECK(o.json().at("spherical") == true);
  CHECK(run({"orbit", "--diagram", "G2", "--char", "0,2"}).json().at("height") == 4);
}

TEST_CASE("affine-check and identities") {
  const Outcome bs = run({"affine-check"}, system_text(instantiate("b∗(n)", {3})));
  REQUIRE(bs.status == cli::exit_ok);
  CHECK(bs.json().at("affine") == false);
  const Outcome b3 = run({"identities"}, system_text(instantiate("b(n)", {3})));
  REQUIRE(b3.status == cli::exit_ok);
}

TEST_CASE("exit codes for usage and input errors") {
  CHECK(run({}).status == cli::exit_usage_error);
  CHECK(run({"frobnicate"}).status == cli::exit_usage_error);
  CHECK(run({"enumerate"}).status == cli::exit_usage_error);
  const Outcome help = run({"--help"});
  CHECK(help.status == cli::exit_ok);
  CHECK(help.out.find("enumerate") != std::string::npos);
  const Outcome malformed = run({"validate"}, "{\n  \"diagram\": ,\n}");
  CHECK(malformed.status == cli::exit_domain_error);
  CHECK(malformed.json().at("error").at("kind") == "parse");
  CHECK(malformed.json().at("error").at("message").get<std::string>().find("line 2") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"enumerate", "--diagram", "B3", "--classify"},
                                             {"catalog", "families"},
                                             {"orbit", "--diagram", "F4", "--char", "0,0,0,1"}}) {
    CHECK(run(args).out == run(args).out);
  }
  const std::string s = system_text(instantiate("fd(4)", {}));
  CHECK(run({"components", "--classify"}, s).out == run({"components", "--classify"}, s).out);
}
