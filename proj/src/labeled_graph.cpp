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

#include "iwg/labeled_graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "iwg/error.hpp"

namespace iwg {

std::string to_string(Color c) {
  switch (c) {
    case Color::black:
      return "black";
    case Color::red:
      return "red";
    case Color::purple:
      return "purple";
  }
  return "?";
}

ColoredPairLabeledGraph::ColoredPairLabeledGraph(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw RankError("graph rank " + std::to_string(rank) + " out of range");
  }
}

void ColoredPairLabeledGraph::add_vertex(Direction d, Color c) {
  if (d.edge() >= rank_) {
    throw InvalidLetter("label " + d.to_string() + " outside rank " +
                        std::to_string(rank_));
  }
  if (c == Color::black) {
    throw Error("vertices are purple or red");
  }
  vertices_[d] = c;
}

void ColoredPairLabeledGraph::add_edge(Direction a, Direction b, Color c) {
  if (a == b) {
    throw Error("self-loop at " + a.to_string());
  }
  for (Direction d : {a, b}) {
    if (!has_vertex(d)) {
      add_vertex(d);
    }
  }
  edges_.insert(Edge{Turn(a, b), c});
}

void ColoredPairLabeledGraph::remove_vertex(Direction d) {
  vertices_.erase(d);
  std::erase_if(edges_, [d](const Edge& e) { return e.ends.contains(d); });
}

bool ColoredPairLabeledGraph::has_edge(Direction a, Direction b) const {
  return has_edge(a, b, Color::black) || has_edge(a, b, Color::red) ||
         has_edge(a, b, Color::purple);
}

int ColoredPairLabeledGraph::valence(Direction d) const {
  int n = 0;
  for (const Edge& e : edges_) {
    if (e.ends.contains(d)) {
      ++n;
    }
  }
  return n;
}

std::vector<Direction> ColoredPairLabeledGraph::neighbors(Direction d) const {
  std::set<Direction> out;
  for (const Edge& e : edges_) {
    if (e.ends.contains(d)) {
      out.insert(e.ends.other(d));
    }
  }
  return {out.begin(), out.end()};
}

TurnSet ColoredPairLabeledGraph::edge_set(Color c) const {
  TurnSet out;
  for (const Edge& e : edges_) {
    if (e.color == c) {
      out.insert(e.ends);
    }
  }
  return out;
}

ColoredPairLabeledGraph ColoredPairLabeledGraph::induced(
    const std::set<Direction>& keep) const {
  ColoredPairLabeledGraph out(rank_);
  for (const auto& [d, c] : vertices_) {
    if (keep.count(d)) {
      out.vertices_[d] = c;
    }
  }
  for (const Edge& e : edges_) {
    if (keep.count(e.ends.first()) && keep.count(e.ends.second())) {
      out.edges_.insert(e);
    }
  }
  return out;
}

ColoredPairLabeledGraph ColoredPairLabeledGraph::without_color(Color c) const {
  ColoredPairLabeledGraph out = *this;
  std::erase_if(out.edges_, [c](const Edge& e) { return e.color == c; });
  return out;
}

ColoredPairLabeledGraph ColoredPairLabeledGraph::relabeled(
    const PairPermutation& p) const {
  if (p.source_rank() != rank_) {
    throw RankError("relabeling of rank " + std::to_string(p.source_rank()) +
                    " applied to a rank " + std::to_string(rank_) + " graph");
  }
  ColoredPairLabeledGraph out(p.target_rank());
  for (const auto& [d, c] : vertices_) {
    out.vertices_[p(d)] = c;
  }
  for (const Edge& e : edges_) {
    out.edges_.insert(Edge{p(e.ends), e.color});
  }
  return out;
}

namespace {

using Multiplicity = std::map<Turn, std::vector<int>>;

// Per vertex pair, edge counts by color (or one total when colors are
// ignored).
Multiplicity multiplicities(const ColoredPairLabeledGraph& g,
                            bool respect_colors) {
  Multiplicity out;
  for (const Edge& e : g.edges()) {
    auto& v = out[e.ends];
    v.resize(3, 0);
    ++v[respect_colors ? static_cast<int>(e.color) : 0];
  }
  return out;
}

std::vector<int> lookup(const Multiplicity& m, Direction a, Direction b) {
  auto it = m.find(Turn(a, b));
  return it == m.end() ? std::vector<int>(3, 0) : it->second;
}

struct Matcher {
  const ColoredPairLabeledGraph& g1;
  const ColoredPairLabeledGraph& g2;
  LabelMode mode;
  bool respect_colors;
  Multiplicity m1, m2;
  std::vector<Direction> order;
  std::map<Direction, Direction> f;
  std::set<Direction> used;

  bool compatible(Direction v, Direction w) const {
    if (used.count(w) || !g2.has_vertex(w)) {
      return false;
    }
    if (respect_colors && g1.vertex_color(v) != g2.vertex_color(w)) {
      return false;
    }
    return g1.valence(v) == g2.valence(w);
  }

  bool consistent(Direction v) const {
    Direction w = f.at(v);
    for (const auto& [u, x] : f) {
      if (u != v && lookup(m1, v, u) != lookup(m2, w, x)) {
        return false;
      }
    }
    return true;
  }

  bool assign(Direction v, Direction w, std::vector<Direction>& added) {
    if (!compatible(v, w)) {
      return false;
    }
    f[v] = w;
    used.insert(w);
    added.push_back(v);
    return consistent(v);
  }

  void undo(const std::vector<Direction>& added) {
    for (Direction v : added) {
      used.erase(f[v]);
      f.erase(v);
    }
  }

  bool search(std::size_t i) {
    while (i < order.size() && f.count(order[i])) {
      ++i;
    }
    if (i == order.size()) {
      return true;
    }
    Direction v = order[i];
    for (const auto& entry : g2.vertices()) {
      Direction w = entry.first;
      std::vector<Direction> added;
      bool ok = assign(v, w, added);
      if (ok && mode == LabelMode::edge_pairs) {
        bool has1 = g1.has_vertex(v.bar());
        bool has2 = g2.has_vertex(w.bar());
        ok = has1 == has2 && (!has1 || assign(v.bar(), w.bar(), added));
      }
      if (ok && search(i + 1)) {
        return true;
      }
      undo(added);
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<Direction, Direction>> find_isomorphism(
    const ColoredPairLabeledGraph& g1, const ColoredPairLabeledGraph& g2,
    LabelMode mode, bool respect_colors) {
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  Multiplicity m1 = multiplicities(g1, respect_colors);
  Multiplicity m2 = multiplicities(g2, respect_colors);
  if (mode == LabelMode::exact) {
    bool same = m1 == m2;
    for (const auto& [d, c] : g1.vertices()) {
      same = same && g2.has_vertex(d) &&
             (!respect_colors || g2.vertex_color(d) == c);
    }
    if (!same) {
      return std::nullopt;
    }
    std::map<Direction, Direction> id;
    for (const auto& entry : g1.vertices()) {
      id[entry.first] = entry.first;
    }
    return id;
  }
  if (mode == LabelMode::edge_pairs && g1.rank() != g2.rank()) {
    return std::nullopt;
  }
  Matcher m{g1, g2, mode, respect_colors, std::move(m1), std::move(m2), {},
            {}, {}};
  for (const auto& entry : g1.vertices()) {
    m.order.push_back(entry.first);
  }
  // Most constrained first.
  std::stable_sort(m.order.begin(), m.order.end(),
                   [&](Direction a, Direction b) {
                     return g1.valence(a) > g1.valence(b);
                   });
  if (!m.search(0)) {
    return std::nullopt;
  }
  return m.f;
}

bool is_isomorphic(const ColoredPairLabeledGraph& g1,
                   const ColoredPairLabeledGraph& g2, LabelMode mode,
                   bool respect_colors) {
  return find_isomorphism(g1, g2, mode, respect_colors).has_value();
}

std::set<Direction> cut_vertices(const ColoredPairLabeledGraph& g) {
  std::map<Direction, int> index, low;
  std::set<Direction> out;
  int counter = 0;
  std::function<void(Direction, std::optional<Direction>)> visit =
      [&](Direction v, std::optional<Direction> parent) {
        index[v] = low[v] = counter++;
        int children = 0;
        for (Direction w : g.neighbors(v)) {
          if (!index.count(w)) {
            ++children;
            visit(w, v);
            low[v] = std::min(low[v], low[w]);
            if (parent && low[w] >= index[v]) {
              out.insert(v);
            }
          } else if (!parent || w != *parent) {
            low[v] = std::min(low[v], index[w]);
          }
        }
        if (!parent && children > 1) {
          out.insert(v);
        }
      };
  for (const auto& entry : g.vertices()) {
    if (!index.count(entry.first)) {
      visit(entry.first, std::nullopt);
    }
  }
  return out;
}

std::vector<std::set<Direction>> connected_components(
    const ColoredPairLabeledGraph& g) {
  std::vector<std::set<Direction>> out;
  std::set<Direction> seen;
  for (const auto& entry : g.vertices()) {
    if (seen.count(entry.first)) {
      continue;
    }
    std::set<Direction> comp;
    std::vector<Direction> todo{entry.first};
    seen.insert(entry.first);
    while (!todo.empty()) {
      Direction v = todo.back();
      todo.pop_back();
      comp.insert(v);
      for (Direction w : g.neighbors(v)) {
        if (seen.insert(w).second) {
          todo.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::string to_dot(const ColoredPairLabeledGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& [d, c] : g.vertices()) {
    out << "  \"" << d.to_string() << "\" [color=" << to_string(c) << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  \"" << e.ends.first().to_string() << "\" -- \""
        << e.ends.second().to_string() << "\" [color=" << to_string(e.color)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace iwg
