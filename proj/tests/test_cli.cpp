// Copyright 2026 The iwg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "iwg/cli.hpp"
#include "iwg/io.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "iwg");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = iwg::cli::run(static_cast<int>(argv.size()), argv.data(), in, out,
                           err);
  return {code, out.str(), err.str()};
}

std::string example() { return run({"example", "lemma-3-6"}).out; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("example piped into verify") {
    Outcome e = run({"example", "lemma-3-6"});
    CHECK(e.code == 0);
    Outcome v = run({"verify"}, e.out);
    CHECK(v.code == 0);
    CHECK(v.out.find("train track: yes") != std::string::npos);
    CHECK(v.out.find("cyclically admissible: yes") != std::string::npos);
    CHECK(v.out.find("prevention sequence: yes (square)") !=
          std::string::npos);
  }

  TEST_CASE("inadmissible pair fails verification") {
    Outcome v =
        run({"verify"}, R"({"rank": 2, "generators": ["a->ba", "a->b-a"]})");
    CHECK(v.code == 1);
    CHECK(v.out.find("cyclically admissible: no") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "/nonexistent/file"}).code == 2);
    CHECK(run({"verify"}, "{").code == 2);
    CHECK(run({"--emit", "xml", "verify"}, example()).code == 2);
    CHECK(run({"example", "nope"}).code == 2);
    CHECK(run({"pipeline"}).code == 2);
    CHECK(run({"verify", "--emit", "dot"}, example()).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("invariants of the example") {
    Outcome i = run({"index"}, example());
    CHECK(i.code == 0);
    CHECK(i.out == "index list: {-3/2}\n");
    Outcome g = run({"iwg"}, example());
    CHECK(g.code == 0);
    CHECK(g.out.find("edges: {a,c-} {a-,b-} {a-,c} {b-,c-}") !=
          std::string::npos);
    Outcome l = run({"ltt"}, example());
    CHECK(l.code == 0);
    CHECK(l.out.find("red b|c purple {a,c-} {a-,b-} {a-,c} {b-,c-}") == 0);
    Outcome d = run({"id-diagram"}, example());
    CHECK(d.code == 0);
    CHECK(d.out.find("component nodes: 8") != std::string::npos);
    Outcome p = run({"pnp"}, example());
    CHECK(p.code == 0);
    CHECK(p.out.find("verdict: NoneLegalized") == 0);
  }

  TEST_CASE("search bounds reach the search") {
    Outcome p = run({"--bounds.max-passes", "1", "pnp"}, example());
    CHECK(p.code == 3);
    CHECK(p.out.find("verdict: Inconclusive") == 0);
    Outcome q = run({"pnp", "--bounds.max-len", "2"}, example());
    CHECK(q.code == 3);
  }

  TEST_CASE("a geometric map is a checked failure") {
    Outcome p = run({"pnp"}, R"({"rank": 2, "generators": ["a->ba", "b->ab"]})");
    CHECK((p.code == 1 || p.code == 3));
  }

  TEST_CASE("pipeline emits a graph with a cut vertex") {
    Outcome p = run({"pipeline", "--rank", "4", "--emit", "dot"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("graph IW {", 0) == 0);
    Outcome t = run({"pipeline", "--rank", "4"});
    CHECK(t.out.find("cut vertices: a- b-") != std::string::npos);
    CHECK(t.out.find("granted: yes") != std::string::npos);
    Outcome j = run({"--emit", "json", "pipeline", "--rank", "4"});
    CHECK(j.code == 0);
    CHECK(iwg::Json::parse(j.out)["rank"] == 4);
  }

  TEST_CASE("glue two units") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "iwg_cli_test";
    fs::create_directories(dir);
    // The square of the example relabeled so the red edge is [a, b].
    iwg::Decomposition u = iwg::nine_step_example().power(2).relabeled(
        iwg::PairPermutation(3, {iwg::Direction::positive(2),
                                 iwg::Direction::positive(0),
                                 iwg::Direction::positive(1)}));
    std::ofstream(dir / "unit.json") << iwg::to_json(u).dump();
    std::string path = (dir / "unit.json").string();
    Outcome g = run({"glue", path, path});
    CHECK(g.code == 0);
    CHECK(g.out.find("rank: 4") == 0);
    CHECK(g.out.find("granted: yes") != std::string::npos);
    Outcome bad = run({"glue", path, path, "--shared", "a"});
    CHECK(bad.code == 2);
    std::string out = (dir / "out.txt").string();
    Outcome o = run({"--out", out, "index"}, example());
    CHECK(o.out.empty());
    std::ifstream f(out);
    std::string line;
    std::getline(f, line);
    CHECK(line == "index list: {-3/2}");
  }

  TEST_CASE("output is byte stable") {
    std::string e = example();
    for (const char* verb : {"iwg", "ltt", "id-diagram", "pnp"}) {
      for (const char* fmt : {"text", "json"}) {
        CHECK(run({"--emit", fmt, verb}, e).out ==
              run({"--emit", fmt, verb}, e).out);
      }
    }
  }
}
