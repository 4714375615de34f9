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

#include "iwg/io.hpp"

#include <sstream>

#include "iwg/error.hpp"

namespace iwg {

namespace {

Direction parse_label(const Json& j, int rank) {
  if (!j.is_string()) {
    throw FormatError("expected a direction label, got " + j.dump());
  }
  try {
    return Direction::parse(j.get<std::string>(), rank);
  } catch (const InvalidLetter& e) {
    throw FormatError(e.what());
  }
}

Color parse_color(const Json& j) {
  std::string c = j.is_string() ? j.get<std::string>() : "";
  if (c == "purple") {
    return Color::purple;
  }
  if (c == "red") {
    return Color::red;
  }
  if (c == "black") {
    return Color::black;
  }
  throw FormatError("unknown color " + j.dump());
}

int parse_rank(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer()) {
    throw FormatError("missing integer \"rank\"");
  }
  int r = j["rank"].get<int>();
  if (r < 1 || r > kMaxRank) {
    throw FormatError("rank " + std::to_string(r) + " out of range");
  }
  return r;
}

Json turn_json(const Turn& t) {
  return Json::array({t.first().to_string(), t.second().to_string()});
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json gens = Json::array();
  for (const NielsenGenerator& n : d.steps()) {
    gens.push_back({{"x", n.x().to_string()}, {"y", n.y().to_string()}});
  }
  return {{"rank", d.rank()}, {"generators", gens}, {"origin", d.origin()}};
}

Decomposition decomposition_from_json(const Json& j) {
  int rank = parse_rank(j);
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw FormatError("missing array \"generators\"");
  }
  std::vector<NielsenGenerator> steps;
  try {
    for (const Json& g : j["generators"]) {
      if (g.is_string()) {
        steps.push_back(NielsenGenerator::parse(g.get<std::string>(), rank));
      } else if (g.is_object() && g.contains("x") && g.contains("y")) {
        steps.emplace_back(parse_label(g["x"], rank), parse_label(g["y"], rank));
      } else {
        throw FormatError("bad generator " + g.dump());
      }
    }
    int origin = 0;
    if (j.contains("origin")) {
      if (!j["origin"].is_number_integer()) {
        throw FormatError("\"origin\" must be an integer");
      }
      origin = j["origin"].get<int>();
    }
    return Decomposition(rank, std::move(steps), origin);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

Decomposition parse_decomposition(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return decomposition_from_json(j);
}

Json to_json(const ColoredPairLabeledGraph& g) {
  Json vertices = Json::array();
  for (const auto& [d, c] : g.vertices()) {
    vertices.push_back({{"label", d.to_string()}, {"color", to_string(c)}});
  }
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"ends", turn_json(e.ends)}, {"color", to_string(e.color)}});
  }
  return {{"rank", g.rank()}, {"vertices", vertices}, {"edges", edges}};
}

ColoredPairLabeledGraph graph_from_json(const Json& j) {
  int rank = parse_rank(j);
  ColoredPairLabeledGraph g(rank);
  try {
    for (const Json& v : j.at("vertices")) {
      g.add_vertex(parse_label(v.at("label"), rank), parse_color(v.at("color")));
    }
    for (const Json& e : j.at("edges")) {
      const Json& ends = e.at("ends");
      if (!ends.is_array() || ends.size() != 2) {
        throw FormatError("edge needs two ends: " + e.dump());
      }
      g.add_edge(parse_label(ends[0], rank), parse_label(ends[1], rank),
                 parse_color(e.at("color")));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  return g;
}

Json to_json(const LttStructure& s) {
  Json j = {{"rank", s.rank()}};
  try {
    j["red_vertex"] = s.red_vertex().to_string();
    j["red_edge"] = turn_json(s.red_edge());
  } catch (const Error&) {
    j["red_vertex"] = nullptr;
    j["red_edge"] = nullptr;
  }
  j["graph"] = to_json(s.graph());
  return j;
}

LttStructure ltt_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph")) {
    throw FormatError("missing \"graph\"");
  }
  return LttStructure::raw(graph_from_json(j["graph"]));
}

Json to_json(const BranchTrace& b) {
  Json ext = Json::array();
  for (const Extension& e : b.extensions) {
    ext.push_back({{"side", std::string(1, e.side)},
                   {"edge", e.edge.to_string()},
                   {"step", e.step}});
  }
  return {{"start", turn_json(b.start)},
          {"rho1", b.rho1.to_string()},
          {"rho2", b.rho2.to_string()},
          {"extensions", ext},
          {"fate", to_string(b.fate)},
          {"death_step", b.death_step},
          {"final_turn", b.final_turn ? turn_json(*b.final_turn) : Json()}};
}

Json to_json(const SearchResult& r) {
  Json branches = Json::array();
  for (const BranchTrace& b : r.branches) {
    branches.push_back(to_json(b));
  }
  Json j = {{"verdict", to_string(r.verdict)},
            {"steps_per_pass", r.steps_per_pass},
            {"rotationless_exponent", r.rotationless_exponent},
            {"deepest_step", r.deepest_step},
            {"max_len", r.max_len},
            {"branches", branches}};
  if (r.rho) {
    j["rho"] = r.rho->to_string();
    j["period"] = r.period;
  }
  return j;
}

Json to_json(const PnpCertificate& c) {
  return {{"fingerprint", c.fingerprint},
          {"power", c.power},
          {"legalizing", c.legalizing},
          {"search", to_json(c.search)}};
}

Json to_json(const LoopCertificate& c) {
  return {{"granted", c.granted},
          {"reason", c.reason},
          {"length", c.decomposition.size()},
          {"exponent", c.exponent},
          {"admissible", c.admissible},
          {"train_track", c.train_track},
          {"condition_a", c.condition_a},
          {"condition_b", c.condition_b},
          {"condition_c", c.condition_c},
          {"ltt_matches", c.ltt_matches}};
}

Json to_json(const IdDiagram& id) {
  Json nodes = Json::array();
  for (int v : id.seed_nodes) {
    nodes.push_back({{"index", v}, {"structure", to_json(id.nodes[v])}});
  }
  Json arrows = Json::array();
  for (int i : id.seed_arrows) {
    const DiagramArrow& a = id.arrows[i];
    arrows.push_back({{"source", a.source},
                      {"target", a.target},
                      {"generator", a.triple.generator.to_string()},
                      {"kind", to_string(a.triple.kind)},
                      {"determining_edge", turn_json(a.triple.determining_edge)}});
  }
  return {{"explored_nodes", id.nodes.size()},
          {"explored_arrows", id.arrows.size()},
          {"nontrivial_components", id.nontrivial_components},
          {"truncated", id.truncated},
          {"nodes", nodes},
          {"arrows", arrows}};
}

Json to_json(const GlueResult& g) {
  Json j = {{"rank", g.rank},
            {"granted", g.granted},
            {"failure", g.failure},
            {"left_power", g.left_power},
            {"right_power", g.right_power},
            {"admissible", g.admissible},
            {"irreducible", g.irreducible},
            {"turns_taken", g.turns_taken},
            {"pnp_free", g.pnp_free},
            {"ideal_matches", g.ideal_matches},
            {"composite", to_json(g.composite)},
            {"glued", to_json(g.glued)}};
  return j;
}

Json to_json(const PipelineResult& p) {
  Json index = Json::array();
  for (const HalfInteger& h : p.index) {
    index.push_back(h.to_string());
  }
  Json cut = Json::array();
  for (Direction d : p.cut) {
    cut.push_back(d.to_string());
  }
  Json glued = Json::array();
  for (Direction d : p.glued_labels) {
    glued.push_back(d.to_string());
  }
  return {{"rank", p.rank},
          {"granted", p.granted()},
          {"train_track", p.train_track},
          {"expanding", p.expanding},
          {"irreducible", p.irreducible},
          {"cyclically_admissible", p.cyclically_admissible},
          {"pnp_free", p.pnp_free},
          {"iw_connected", p.iw_connected},
          {"iw_vertex_count", p.iw_vertex_count},
          {"cut_vertex", p.cut_vertex},
          {"cut_at_glued", p.cut_at_glued},
          {"index_ok", p.index_ok},
          {"index_list", index},
          {"cut_vertices", cut},
          {"glued_labels", glued},
          {"generators", p.decomposition.size()},
          {"ideal_whitehead_graph", to_json(p.ideal)}};
}

std::string to_dot(const IdDiagram& id, bool seed_component_only) {
  std::ostringstream out;
  out << "digraph ID {\n";
  std::vector<int> nodes;
  std::vector<int> arrows;
  if (seed_component_only) {
    nodes = id.seed_nodes;
    arrows = id.seed_arrows;
  } else {
    for (std::size_t i = 0; i < id.nodes.size(); ++i) {
      nodes.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < id.arrows.size(); ++i) {
      arrows.push_back(static_cast<int>(i));
    }
  }
  for (int v : nodes) {
    out << "  n" << v << " [label=\"" << id.nodes[v].to_string() << "\"];\n";
  }
  for (int i : arrows) {
    const DiagramArrow& a = id.arrows[i];
    out << "  n" << a.source << " -> n" << a.target << " [label=\""
        << a.triple.generator.to_string() << " "
        << to_string(a.triple.kind) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace iwg
