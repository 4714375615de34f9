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

#include "iwg/diagram.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "iwg/error.hpp"
#include "iwg/profile.hpp"

namespace iwg {

std::string to_string(MoveKind k) {
  return k == MoveKind::extension ? "extension" : "switch";
}

namespace {

bool admissible_structure(const LttStructure& s) {
  return validate(s).empty() && is_birecurrent(s);
}

TurnSet rename(const TurnSet& edges, Direction from, Direction to) {
  TurnSet out;
  for (const Turn& t : edges) {
    Direction a = t.first() == from ? to : t.first();
    Direction b = t.second() == from ? to : t.second();
    out.emplace(a, b);
  }
  return out;
}

std::optional<GeneratingTriple> move(const LttStructure& target,
                                     const Turn& determining_edge,
                                     MoveKind kind) {
  Direction x, y;
  try {
    x = target.red_vertex();
    y = target.doubled();
  } catch (const Error&) {
    return std::nullopt;
  }
  TurnSet purple = target.purple_edges();
  if (!purple.count(determining_edge) || !determining_edge.contains(y) ||
      determining_edge.degenerate()) {
    return std::nullopt;
  }
  Direction dl = determining_edge.other(y);
  LttStructure source =
      kind == MoveKind::extension
          ? LttStructure::from_parts(target.rank(), x, dl, purple)
          : LttStructure::from_parts(target.rank(), y, dl,
                                     rename(purple, y, x));
  if (!admissible_structure(source)) {
    return std::nullopt;
  }
  return GeneratingTriple{NielsenGenerator(x, y), source, target, kind,
                          determining_edge};
}

}  // namespace

std::optional<GeneratingTriple> extension(const LttStructure& target,
                                          const Turn& determining_edge) {
  return move(target, determining_edge, MoveKind::extension);
}

std::optional<GeneratingTriple> switch_move(const LttStructure& target,
                                            const Turn& determining_edge) {
  return move(target, determining_edge, MoveKind::switch_move);
}

std::vector<GeneratingTriple> predecessors(const LttStructure& target) {
  std::vector<GeneratingTriple> out;
  Direction y = target.doubled();
  for (const Turn& t : target.purple_edges()) {
    if (!t.contains(y)) {
      continue;
    }
    for (MoveKind k : {MoveKind::extension, MoveKind::switch_move}) {
      if (auto m = move(target, t, k)) {
        out.push_back(std::move(*m));
      }
    }
  }
  return out;
}

bool is_generating_triple(const GeneratingTriple& t) {
  const NielsenGenerator& g = t.generator;
  try {
    if (t.target.red_vertex() != g.x() || t.target.doubled() != g.y()) {
      return false;
    }
  } catch (const Error&) {
    return false;
  }
  if (t.source.rank() != t.target.rank()) {
    return false;
  }
  ColoredPairLabeledGraph from = t.source.purple_graph();
  ColoredPairLabeledGraph to = t.target.purple_graph();
  std::set<Direction> image;
  for (const auto& entry : from.vertices()) {
    image.insert(g(entry.first));
  }
  if (image.size() != from.vertex_count() ||
      image.size() != to.vertex_count()) {
    return false;
  }
  for (Direction d : image) {
    if (!to.has_vertex(d)) {
      return false;
    }
  }
  TurnSet edges;
  for (const Turn& e : from.edge_set(Color::purple)) {
    edges.emplace(g(e.first()), g(e.second()));
  }
  return edges.size() == from.edge_count() &&
         edges == to.edge_set(Color::purple);
}

bool admissible_composition_check(const std::vector<GeneratingTriple>& seq,
                                  int native_rank) {
  if (seq.empty()) {
    return false;
  }
  auto structure_ok = [native_rank](const LttStructure& s) {
    return admissible_structure(
        native_rank > 0 && native_rank < s.rank() ? s.restricted(native_rank)
                                                  : s);
  };
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const GeneratingTriple& t = seq[i];
    if (i + 1 < seq.size() && !(t.target == seq[i + 1].source)) {
      return false;
    }
    if (!is_generating_triple(t)) {
      return false;
    }
    Direction u = t.source.red_vertex();
    if (u != t.generator.x() && u != t.generator.y()) {
      return false;
    }
    if (!structure_ok(t.source) || !structure_ok(t.target)) {
      return false;
    }
  }
  return true;
}

std::vector<GeneratingTriple> extend_composition(
    const std::vector<GeneratingTriple>& seq, int rank) {
  std::vector<GeneratingTriple> out;
  for (const GeneratingTriple& t : seq) {
    out.push_back(GeneratingTriple{t.generator, t.source.extended(rank),
                                   t.target.extended(rank), t.kind,
                                   t.determining_edge});
  }
  return out;
}

bool IdDiagram::contains(const LttStructure& s) const {
  return index_of(s) >= 0;
}

int IdDiagram::index_of(const LttStructure& s) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == s) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

IdDiagram build_id_diagram(const LttStructure& seed, std::size_t node_budget,
                           std::uint64_t shuffle_seed) {
  IdDiagram id;
  if (!admissible_structure(seed)) {
    return id;
  }
  std::mt19937_64 rng(shuffle_seed);
  std::map<LttStructure, int> index;
  id.nodes.push_back(seed);
  index[seed] = 0;
  for (std::size_t i = 0; i < id.nodes.size(); ++i) {
    LttStructure target = id.nodes[i];
    std::vector<GeneratingTriple> preds = predecessors(target);
    if (shuffle_seed != 0) {
      std::shuffle(preds.begin(), preds.end(), rng);
    }
    for (GeneratingTriple& t : preds) {
      auto it = index.find(t.source);
      int s;
      if (it != index.end()) {
        s = it->second;
      } else if (id.nodes.size() >= node_budget) {
        id.truncated = true;
        continue;
      } else {
        s = static_cast<int>(id.nodes.size());
        index[t.source] = s;
        id.nodes.push_back(t.source);
      }
      id.arrows.push_back(DiagramArrow{s, static_cast<int>(i), std::move(t)});
    }
  }

  int n = static_cast<int>(id.nodes.size());
  std::vector<std::vector<int>> out(n);
  for (const DiagramArrow& a : id.arrows) {
    out[a.source].push_back(a.target);
  }
  std::vector<int> order(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  id.component.assign(n, -1);
  int counter = 0;
  int components = 0;
  std::function<void(int)> visit = [&](int v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : out[v]) {
      if (order[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        id.component[w] = components;
      } while (w != v);
      ++components;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (order[v] < 0) {
      visit(v);
    }
  }
  std::set<int> nontrivial;
  for (std::size_t i = 0; i < id.arrows.size(); ++i) {
    const DiagramArrow& a = id.arrows[i];
    if (id.component[a.source] == id.component[a.target]) {
      nontrivial.insert(id.component[a.source]);
      if (id.component[a.source] == id.component[0]) {
        id.seed_arrows.push_back(static_cast<int>(i));
      }
    }
  }
  id.nontrivial_components = static_cast<int>(nontrivial.size());
  if (nontrivial.count(id.component[0])) {
    for (int v = 0; v < n; ++v) {
      if (id.component[v] == id.component[0]) {
        id.seed_nodes.push_back(v);
      }
    }
  }
  return id;
}

std::optional<std::vector<GeneratingTriple>> realizing_loop(
    const Decomposition& d, const LttStructure& end) {
  auto steps = d.effective_steps();
  int n = static_cast<int>(steps.size());
  if (n == 0) {
    return std::nullopt;
  }
  std::vector<GeneratingTriple> backward;
  LttStructure current = end;
  for (int k = n - 1; k >= 0; --k) {
    const NielsenGenerator& g = steps[k];
    const NielsenGenerator& prev = steps[(k + n - 1) % n];
    if (current.red_vertex() != g.x() || current.doubled() != g.y()) {
      return std::nullopt;
    }
    MoveKind kind =
        prev.x() == g.x() ? MoveKind::extension : MoveKind::switch_move;
    auto m = move(current, Turn(g.y(), prev.y().bar()), kind);
    if (!m) {
      return std::nullopt;
    }
    current = m->source;
    backward.push_back(std::move(*m));
  }
  if (!(current == end)) {
    return std::nullopt;
  }
  std::reverse(backward.begin(), backward.end());
  return backward;
}

std::optional<std::vector<GeneratingTriple>> diagram_path(const IdDiagram& id,
                                                          int from, int to) {
  std::vector<GeneratingTriple> path;
  if (from == to) {
    return path;
  }
  int n = static_cast<int>(id.nodes.size());
  std::vector<int> via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<int> todo{from};
  seen[from] = true;
  while (!todo.empty() && !seen[to]) {
    int v = todo.front();
    todo.pop_front();
    for (int i : id.seed_arrows) {
      const DiagramArrow& a = id.arrows[i];
      if (a.source == v && !seen[a.target]) {
        seen[a.target] = true;
        via[a.target] = i;
        todo.push_back(a.target);
      }
    }
  }
  if (!seen[to]) {
    return std::nullopt;
  }
  for (int v = to; v != from; v = id.arrows[via[v]].source) {
    path.push_back(id.arrows[via[v]].triple);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::vector<GeneratingTriple>> loop_through(
    const IdDiagram& id, const std::vector<GeneratingTriple>& base, int node) {
  auto there = diagram_path(id, 0, node);
  auto back = diagram_path(id, node, 0);
  if (!there || !back) {
    return std::nullopt;
  }
  std::vector<GeneratingTriple> loop = base;
  loop.insert(loop.end(), there->begin(), there->end());
  loop.insert(loop.end(), back->begin(), back->end());
  return loop;
}

Decomposition loop_decomposition(const std::vector<GeneratingTriple>& loop) {
  if (loop.empty()) {
    throw Error("empty loop");
  }
  std::vector<NielsenGenerator> steps;
  for (const GeneratingTriple& t : loop) {
    steps.push_back(t.generator);
  }
  return Decomposition(loop.front().source.rank(), std::move(steps));
}

LoopCertificate check_representative_loop(
    const std::vector<GeneratingTriple>& loop, const SearchBounds& bounds) {
  LoopCertificate c;
  if (loop.empty()) {
    c.reason = "empty loop";
    return c;
  }
  if (!(loop.back().target == loop.front().source)) {
    c.reason = "loop does not close up";
    return c;
  }
  c.admissible = admissible_composition_check(loop);
  if (!c.admissible) {
    c.reason = "not an admissible composition";
    return c;
  }
  Decomposition d = loop_decomposition(loop);
  MapProfile p = MapProfile::of(d);
  c.exponent = rotationless_power(p).exponent;
  c.decomposition = d.power(c.exponent);
  p = power(p, c.exponent);
  c.train_track = is_train_track(p);
  if (!c.train_track) {
    c.reason = "composite is not a train track map";
    return c;
  }
  const LttStructure& g0 = loop.front().source;
  TurnClosure closure = TurnClosure::of(p);
  const DirectionMap& dg = p.direction_map();
  c.condition_a = true;
  for (const Turn& t : g0.purple_edges()) {
    if (!closure.contains(t) || !dg.is_periodic(t.first()) ||
        !dg.is_periodic(t.second())) {
      c.condition_a = false;
    }
  }
  c.condition_b = is_irreducible(p.transition_matrix());
  c.pnp = certify_pnp_free(c.decomposition, bounds);
  c.condition_c = c.pnp.has_value();
  try {
    c.ltt_matches = build_ltt(p) == g0;
  } catch (const Error&) {
    c.ltt_matches = false;
  }
  c.granted = c.condition_a && c.condition_b && c.condition_c && c.ltt_matches;
  if (!c.granted) {
    c.reason = !c.condition_a   ? "condition A fails"
               : !c.condition_b ? "condition B fails"
               : !c.condition_c ? "condition C fails"
                                : "G(g) differs from G_0";
  }
  return c;
}

}  // namespace iwg
