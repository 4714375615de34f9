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

#include "iwg/ltt.hpp"

#include <functional>
#include <map>
#include <set>

#include "iwg/error.hpp"

namespace iwg {

std::string to_string(Axiom a) {
  static const char* const kNames[] = {"I", "II", "III", "IV", "V", "VI"};
  return kNames[static_cast<int>(a)];
}

LttStructure LttStructure::from_parts(int rank, Direction red_vertex,
                                      Direction red_end,
                                      const TurnSet& purple) {
  ColoredPairLabeledGraph g(rank);
  for (Direction d : all_directions(rank)) {
    g.add_vertex(d, d == red_vertex ? Color::red : Color::purple);
  }
  for (int i = 0; i < rank; ++i) {
    g.add_edge(Direction::positive(i), Direction::negative(i), Color::black);
  }
  g.add_edge(red_vertex, red_end, Color::red);
  for (const Turn& t : purple) {
    g.add_edge(t.first(), t.second(), Color::purple);
  }
  return raw(std::move(g));
}

LttStructure LttStructure::raw(ColoredPairLabeledGraph g) {
  LttStructure s;
  s.graph_ = std::move(g);
  return s;
}

Direction LttStructure::red_vertex() const {
  for (const auto& [d, c] : graph_.vertices()) {
    if (c == Color::red) {
      return d;
    }
  }
  throw Error("structure has no red vertex");
}

Direction LttStructure::red_end() const {
  Direction rv = red_vertex();
  for (const Edge& e : graph_.edges()) {
    if (e.color == Color::red && e.ends.contains(rv)) {
      return e.ends.other(rv);
    }
  }
  throw Error("structure has no red edge");
}

ColoredPairLabeledGraph LttStructure::purple_graph() const {
  std::set<Direction> keep;
  for (const auto& [d, c] : graph_.vertices()) {
    if (c == Color::purple) {
      keep.insert(d);
    }
  }
  ColoredPairLabeledGraph g = graph_.induced(keep);
  return g.without_color(Color::black).without_color(Color::red);
}

LttStructure LttStructure::relabeled(const PairPermutation& p) const {
  return raw(graph_.relabeled(p));
}

LttStructure LttStructure::extended(int rank) const {
  if (rank < this->rank()) {
    throw RankError("cannot extend a structure to a smaller rank");
  }
  ColoredPairLabeledGraph g = graph_.relabeled(
      PairPermutation::inclusion(this->rank(), rank));
  for (int i = this->rank(); i < rank; ++i) {
    g.add_edge(Direction::positive(i), Direction::negative(i), Color::black);
  }
  return raw(std::move(g));
}

LttStructure LttStructure::restricted(int rank) const {
  std::set<Direction> keep;
  for (const auto& entry : graph_.vertices()) {
    if (entry.first.edge() < rank) {
      keep.insert(entry.first);
    }
  }
  ColoredPairLabeledGraph small(rank);
  ColoredPairLabeledGraph induced = graph_.induced(keep);
  for (const auto& [d, c] : induced.vertices()) {
    small.add_vertex(d, c);
  }
  for (const Edge& e : induced.edges()) {
    small.add_edge(e.ends.first(), e.ends.second(), e.color);
  }
  return raw(std::move(small));
}

std::string LttStructure::to_string() const {
  std::string out = "red ";
  try {
    out += red_vertex().to_string() + "|" + red_end().to_string();
  } catch (const Error&) {
    out += "?";
  }
  out += " purple";
  for (const Turn& t : purple_edges()) {
    out += " " + t.to_string();
  }
  return out;
}

std::vector<AxiomViolation> validate(const LttStructure& s) {
  std::vector<AxiomViolation> out;
  const ColoredPairLabeledGraph& g = s.graph();
  int r = g.rank();
  for (const auto& [d, c] : g.vertices()) {
    if (g.valence(d) < 2) {
      out.push_back({Axiom::I, "vertex " + d.to_string() + " has valence " +
                                   std::to_string(g.valence(d))});
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.ends.degenerate() || !g.has_vertex(e.ends.first()) ||
        !g.has_vertex(e.ends.second())) {
      out.push_back({Axiom::II, "edge " + e.ends.to_string() +
                                    " lacks two distinct vertices"});
    }
  }
  int purple_vertices = 0;
  int red_vertices = 0;
  for (const auto& [d, c] : g.vertices()) {
    if (c == Color::purple) {
      ++purple_vertices;
    } else if (c == Color::red) {
      ++red_vertices;
    } else {
      out.push_back({Axiom::III, "vertex " + d.to_string() + " is " +
                                     to_string(c)});
    }
  }
  auto is_red = [&](Direction d) {
    return g.has_vertex(d) && g.vertex_color(d) == Color::red;
  };
  int red_edges = 0;
  for (int i = 0; i < r; ++i) {
    if (!g.has_edge(Direction::positive(i), Direction::negative(i),
                    Color::black)) {
      out.push_back({Axiom::IV, "no black edge for pair " +
                                    Direction::positive(i).to_string()});
    }
  }
  for (const Edge& e : g.edges()) {
    bool touches_red = is_red(e.ends.first()) || is_red(e.ends.second());
    switch (e.color) {
      case Color::black:
        if (e.ends.first().bar() != e.ends.second()) {
          out.push_back({Axiom::IV, "black edge " + e.ends.to_string() +
                                        " joins two pairs"});
        }
        break;
      case Color::red:
        ++red_edges;
        if (!touches_red) {
          out.push_back({Axiom::IV, "red edge " + e.ends.to_string() +
                                        " has no red vertex"});
        }
        break;
      case Color::purple:
        if (touches_red) {
          out.push_back({Axiom::IV, "purple edge " + e.ends.to_string() +
                                        " touches the red vertex"});
        }
        if (g.has_edge(e.ends.first(), e.ends.second(), Color::red)) {
          out.push_back({Axiom::V, "colored edges " + e.ends.to_string() +
                                       " are parallel"});
        }
        break;
    }
  }
  if (purple_vertices != 2 * r - 1 || red_vertices != 1 || red_edges != 1) {
    out.push_back({Axiom::VI, std::to_string(purple_vertices) +
                                  " purple vertices, " +
                                  std::to_string(red_vertices) +
                                  " red vertices, " +
                                  std::to_string(red_edges) + " red edges"});
  }
  return out;
}

bool is_birecurrent(const LttStructure& s) {
  struct Dart {
    Direction from, to;
    int edge;
    bool black;
  };
  std::vector<Dart> darts;
  int edge_count = 0;
  for (const Edge& e : s.graph().edges()) {
    bool black = e.color == Color::black;
    darts.push_back({e.ends.first(), e.ends.second(), edge_count, black});
    darts.push_back({e.ends.second(), e.ends.first(), edge_count, black});
    ++edge_count;
  }
  if (edge_count == 0) {
    return false;
  }
  int n = static_cast<int>(darts.size());
  std::vector<std::vector<int>> next(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (darts[j].from == darts[i].to && darts[j].edge != darts[i].edge &&
          darts[j].black != darts[i].black) {
        next[i].push_back(j);
      }
    }
  }
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  bool covering = false;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : next[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::set<int> edges;
      int size = 0;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        edges.insert(darts[w].edge);
        ++size;
      } while (w != v);
      if (size > 1 && static_cast<int>(edges.size()) == edge_count) {
        covering = true;
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) {
      visit(v);
    }
  }
  return covering;
}

LttStructure build_ltt(const MapProfile& p) {
  if (!is_irreducible(p.transition_matrix()) ||
      !is_expanding(p.transition_matrix())) {
    throw Error("build_ltt needs an expanding irreducible map");
  }
  MapProfile q = power(p, rotationless_power(p).exponent);
  auto periodic = q.direction_map().periodic();
  std::set<Direction> purple(periodic.begin(), periodic.end());
  std::vector<Direction> red;
  for (Direction d : all_directions(q.rank())) {
    if (!purple.count(d)) {
      red.push_back(d);
    }
  }
  if (red.size() != 1) {
    throw Error(std::to_string(red.size()) +
                " nonperiodic directions; expected exactly one");
  }
  Direction rv = red.front();
  TurnSet purple_edges;
  std::vector<Direction> red_ends;
  for (const Turn& t : TurnClosure::of(q).nondegenerate()) {
    if (t.contains(rv)) {
      red_ends.push_back(t.other(rv));
    } else {
      purple_edges.insert(t);
    }
  }
  if (red_ends.size() != 1) {
    throw Error(std::to_string(red_ends.size()) + " red edges at " +
                rv.to_string() + "; expected exactly one");
  }
  return LttStructure::from_parts(q.rank(), rv, red_ends.front(),
                                  purple_edges);
}

LttStructure build_ltt(const Decomposition& d, const PnpCertificate& cert) {
  if (!certifies(cert, d)) {
    throw MissingCertificate("certificate was issued for " +
                             cert.fingerprint + ", not " + fingerprint(d));
  }
  if (d.empty()) {
    throw Error("empty decomposition");
  }
  MapProfile p = MapProfile::of(d);
  if (!is_train_track(p)) {
    throw NotTrainTrack("composite of " + fingerprint(d) +
                        " is not a train track map");
  }
  LttStructure s = build_ltt(p);
  NielsenGenerator last = d.effective_steps().back();
  if (s.red_vertex() != last.x() || s.red_end() != last.y().bar()) {
    throw Error("red data " + s.red_edge().to_string() +
                " disagrees with the final generator " + last.to_string());
  }
  return s;
}

}  // namespace iwg
