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

#include "iwg/cli.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "iwg/diagram.hpp"
#include "iwg/error.hpp"
#include "iwg/io.hpp"
#include "iwg/ltt.hpp"
#include "iwg/nielsen_paths.hpp"
#include "iwg/profile.hpp"
#include "iwg/synthesis.hpp"
#include "iwg/whitehead.hpp"

namespace iwg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string emit = "text";
  std::string out_path;
  int rank = 0;
  int max_passes = 3;
  std::uint64_t max_len = 0;
  std::string input;
  std::string right_input;
  std::string shared = "a,b";
  std::string example;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(const Options& o, std::istream& in) : o_(o), in_(in) {
    bounds_.max_passes = o.max_passes;
    bounds_.max_len = o.max_len;
  }

  std::string text;
  int code = kSuccess;

  std::string read(const std::string& path) {
    if (path.empty() || path == "-") {
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream f(path);
    if (!f) {
      throw UsageError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  Decomposition load(const std::string& path) {
    Decomposition d = parse_decomposition(read(path));
    if (o_.rank > 0) {
      d = d.extended(o_.rank);
    }
    return d;
  }

  void emit(const Json& j, const std::string& plain, const std::string& dot) {
    if (o_.emit == "json") {
      text = j.dump(2) + "\n";
    } else if (o_.emit == "dot") {
      if (dot.empty()) {
        throw UsageError("this verb has no DOT output");
      }
      text = dot;
    } else {
      text = plain;
    }
  }

  // Certificate for d, or an exit code and a message.
  std::optional<PnpCertificate> certificate(const Decomposition& d) {
    if (!is_train_track(d)) {
      code = kCheckedFailure;
      text = "not a train track map\n";
      return std::nullopt;
    }
    auto c = certify_pnp_free(d, bounds_);
    if (!c) {
      SearchResult r = search_inps(d, bounds_);
      code = r.verdict == Verdict::Inconclusive ? kInconclusive
                                                : kCheckedFailure;
      text = "no certificate: search " + to_string(r.verdict) + "\n";
    }
    return c;
  }

  void verify() {
    Decomposition d = load(o_.input);
    MapProfile p = MapProfile::of(d);
    bool admissible = is_cyclically_admissible(d);
    bool tt = !d.empty() && is_train_track(p);
    bool expanding = is_expanding(p.transition_matrix());
    bool strict = is_strictly_irreducible(p.transition_matrix());
    bool irreducible = is_irreducible(p.transition_matrix());
    std::string prevention = "no";
    if (admissible && tt) {
      if (is_legalizing_prevention_sequence(d)) {
        prevention = "yes";
      } else if (is_legalizing_prevention_sequence(d.power(2))) {
        prevention = "yes (square)";
      }
    }
    std::ostringstream s;
    s << "rank: " << d.rank() << "\n"
      << "generators: " << d.size() << "\n"
      << "cyclically admissible: " << yes(admissible) << "\n"
      << "train track: " << yes(tt) << "\n"
      << "expanding: " << yes(expanding) << "\n"
      << "irreducible: " << yes(irreducible) << "\n"
      << "strictly irreducible: " << yes(strict) << "\n"
      << "prevention sequence: " << prevention << "\n";
    Json j = {{"rank", d.rank()},
              {"generators", d.size()},
              {"cyclically_admissible", admissible},
              {"train_track", tt},
              {"expanding", expanding},
              {"irreducible", irreducible},
              {"strictly_irreducible", strict},
              {"prevention_sequence", prevention}};
    emit(j, s.str(), "");
    code = admissible && tt && prevention != "no" ? kSuccess : kCheckedFailure;
  }

  void iwg(bool index_only) {
    Decomposition d = load(o_.input);
    auto c = certificate(d);
    if (!c) {
      return;
    }
    ColoredPairLabeledGraph iw = ideal_whitehead_graph(d, &*c);
    std::vector<HalfInteger> index = index_list(iw);
    std::string list = "{";
    Json jindex = Json::array();
    for (std::size_t i = 0; i < index.size(); ++i) {
      list += (i ? ", " : "") + index[i].to_string();
      jindex.push_back(index[i].to_string());
    }
    list += "}";
    if (index_only) {
      emit({{"index_list", jindex}}, "index list: " + list + "\n", "");
      return;
    }
    std::ostringstream s;
    s << "vertices:";
    for (const auto& entry : iw.vertices()) {
      s << " " << entry.first.to_string();
    }
    s << "\nedges:";
    for (const Edge& e : iw.edges()) {
      s << " " << e.ends.to_string();
    }
    s << "\ncomponents: " << connected_components(iw).size() << "\n";
    s << "cut vertices:";
    for (Direction v : cut_vertices(iw)) {
      s << " " << v.to_string();
    }
    s << "\nindex list: " << list << "\n";
    Json j = {{"graph", to_json(iw)}, {"index_list", jindex}};
    emit(j, s.str(), to_dot(iw, "IW"));
  }

  void ltt() {
    Decomposition d = load(o_.input);
    auto c = certificate(d);
    if (!c) {
      return;
    }
    LttStructure s = build_ltt(d, *c);
    auto violations = validate(s);
    std::ostringstream t;
    t << s.to_string() << "\n";
    t << "axiom violations: " << violations.size() << "\n";
    t << "birecurrent: " << yes(is_birecurrent(s)) << "\n";
    emit(to_json(s), t.str(), to_dot(s.graph(), "LTT"));
    code = violations.empty() ? kSuccess : kCheckedFailure;
  }

  void id_diagram() {
    Decomposition d = load(o_.input);
    auto c = certificate(d);
    if (!c) {
      return;
    }
    LttStructure seed = build_ltt(d, *c);
    IdDiagram id = build_id_diagram(seed);
    std::ostringstream t;
    t << "seed: " << seed.to_string() << "\n"
      << "explored nodes: " << id.nodes.size() << "\n"
      << "explored arrows: " << id.arrows.size() << "\n"
      << "component nodes: " << id.seed_nodes.size() << "\n"
      << "component arrows: " << id.seed_arrows.size() << "\n"
      << "nontrivial components: " << id.nontrivial_components << "\n";
    if (id.truncated) {
      t << "truncated: yes\n";
    }
    for (int v : id.seed_nodes) {
      t << "  n" << v << " " << id.nodes[v].to_string() << "\n";
    }
    emit(to_json(id), t.str(), to_dot(id));
    code = id.seed_nodes.empty() ? kCheckedFailure : kSuccess;
  }

  void pnp() {
    Decomposition d = load(o_.input);
    if (!is_train_track(d)) {
      code = kCheckedFailure;
      text = "not a train track map\n";
      return;
    }
    SearchResult r = search_inps(d, bounds_);
    std::ostringstream t;
    t << "verdict: " << to_string(r.verdict) << "\n";
    if (r.rho) {
      t << "rho: " << r.rho->to_string() << " period " << r.period << "\n";
    }
    for (const BranchTrace& b : r.branches) {
      t << "  " << to_string(b.fate) << " at step " << b.death_step
        << " rho1=" << b.rho1.to_string() << " rho2=" << b.rho2.to_string();
      if (b.final_turn) {
        t << " turn " << b.final_turn->to_string();
      }
      for (const Extension& e : b.extensions) {
        t << " " << e.side << ":" << e.edge.to_string() << "@" << e.step;
      }
      t << "\n";
    }
    emit(to_json(r), t.str(), "");
    code = r.verdict == Verdict::NoneLegalized ? kSuccess
           : r.verdict == Verdict::Found       ? kCheckedFailure
                                               : kInconclusive;
  }

  void glue() {
    Decomposition left = parse_decomposition(read(o_.input));
    Decomposition right = parse_decomposition(read(o_.right_input));
    std::set<int> shared;
    std::stringstream ss(o_.shared);
    std::string item;
    while (std::getline(ss, item, ',')) {
      shared.insert(Direction::parse(item, kMaxRank).edge());
    }
    auto lc = certificate(left);
    if (!lc) {
      return;
    }
    auto rc = certificate(right);
    if (!rc) {
      return;
    }
    GluingSpec spec{left, build_ltt(left, *lc), right, build_ltt(right, *rc),
                    shared};
    GlueResult g = realize_glued(spec, bounds_);
    std::ostringstream t;
    t << "rank: " << g.rank << "\n"
      << "(i) cyclically admissible: " << yes(g.admissible) << "\n"
      << "(ii) square strictly irreducible: " << yes(g.irreducible) << "\n"
      << "(iii) glued turns taken: " << yes(g.turns_taken) << "\n"
      << "(iv) no periodic Nielsen paths: " << yes(g.pnp_free) << "\n"
      << "(v) ideal Whitehead graph matches: " << yes(g.ideal_matches) << "\n"
      << "granted: " << yes(g.granted) << "\n";
    if (!g.granted) {
      t << "failure: " << g.failure << "\n";
    }
    emit(to_json(g), t.str(), to_dot(g.glued, "GLUED"));
    code = g.granted ? kSuccess : kCheckedFailure;
  }

  void pipeline() {
    if (o_.rank < 3) {
      throw UsageError("pipeline needs --rank >= 3");
    }
    PipelineResult p = cut_vertex_pipeline(o_.rank, bounds_);
    std::ostringstream t;
    t << "rank: " << p.rank << "\n"
      << "generators: " << p.decomposition.size() << "\n"
      << "train track: " << yes(p.train_track) << "\n"
      << "expanding: " << yes(p.expanding) << "\n"
      << "irreducible: " << yes(p.irreducible) << "\n"
      << "cyclically admissible: " << yes(p.cyclically_admissible) << "\n"
      << "no periodic Nielsen paths: " << yes(p.pnp_free) << "\n"
      << "ideal Whitehead graph connected: " << yes(p.iw_connected) << "\n"
      << "ideal Whitehead graph vertices: " << p.ideal.vertex_count() << "\n"
      << "cut vertices:";
    for (Direction d : p.cut) {
      t << " " << d.to_string();
    }
    t << "\nglued labels:";
    for (Direction d : p.glued_labels) {
      t << " " << d.to_string();
    }
    t << "\nindex list:";
    for (const HalfInteger& h : p.index) {
      t << " " << h.to_string();
    }
    t << "\ngranted: " << yes(p.granted()) << "\n";
    emit(to_json(p), t.str(), to_dot(p.ideal, "IW"));
    code = p.granted() ? kSuccess : kCheckedFailure;
  }

  void example() {
    if (o_.example != "lemma-3-6") {
      throw UsageError("unknown example \"" + o_.example + "\"");
    }
    text = to_json(nine_step_example()).dump(2) + "\n";
  }

 private:
  const Options& o_;
  std::istream& in_;
  SearchBounds bounds_;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Train track and ideal Whitehead graph toolkit", "iwg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--emit", o.emit, "Output format")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  app.add_option("--out", o.out_path, "Write output to PATH");
  app.add_option("--rank", o.rank, "Target rank");
  app.add_option("--bounds.max-passes", o.max_passes,
                 "Passes through the sequence in the Nielsen path search")
      ->check(CLI::PositiveNumber);
  app.add_option("--bounds.max-len", o.max_len,
                 "Longest half path in the search (0 = default)");

  auto* verify = app.add_subcommand("verify", "Check a decomposition");
  auto* iwg_cmd = app.add_subcommand("iwg", "Ideal Whitehead graph");
  auto* index = app.add_subcommand("index", "Index list");
  auto* ltt = app.add_subcommand("ltt", "Lamination train track structure");
  auto* diagram = app.add_subcommand("id-diagram", "Ideal decomposition diagram");
  auto* pnp = app.add_subcommand("pnp", "Search for periodic Nielsen paths");
  auto* glue = app.add_subcommand("glue", "Glue two achieved structures");
  auto* pipeline = app.add_subcommand("pipeline", "Cut vertex construction");
  auto* example = app.add_subcommand("example", "Built-in decompositions");
  for (auto* sub : {verify, iwg_cmd, index, ltt, diagram, pnp}) {
    sub->add_option("input", o.input, "Decomposition file (default stdin)");
  }
  glue->add_option("left", o.input, "Left decomposition")->required();
  glue->add_option("right", o.right_input, "Right decomposition")->required();
  glue->add_option("--shared", o.shared, "Shared labels, e.g. a,b,c");
  example->add_option("name", o.example, "lemma-3-6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "iwg: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Runner r(o, in);
  try {
    if (*verify) {
      r.verify();
    } else if (*iwg_cmd) {
      r.iwg(false);
    } else if (*index) {
      r.iwg(true);
    } else if (*ltt) {
      r.ltt();
    } else if (*diagram) {
      r.id_diagram();
    } else if (*pnp) {
      r.pnp();
    } else if (*glue) {
      r.glue();
    } else if (*pipeline) {
      r.pipeline();
    } else if (*example) {
      r.example();
    }
  } catch (const UsageError& e) {
    err << "iwg: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "iwg: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    err << "iwg: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "iwg: " << e.what() << "\n";
    return kCheckedFailure;
  }

  if (o.out_path.empty()) {
    out << r.text;
  } else {
    std::ofstream f(o.out_path);
    f << r.text;
    if (!f) {
      err << "iwg: cannot write " << o.out_path << "\n";
      return kUsage;
    }
  }
  return r.code;
}

}  // namespace iwg::cli
