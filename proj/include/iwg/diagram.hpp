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

// Extensions, switches, ideal decomposition diagrams and representative loops.
//
// Labels stay fixed along a sequence of moves: the structure before g_k and
// the one after it are both labeled by the directions of the same rose, and
// the induced map D^T g_k sends vertex d to Dg_k(d).

#ifndef IWG_DIAGRAM_HPP_
#define IWG_DIAGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwg/ltt.hpp"
#include "iwg/nielsen.hpp"
#include "iwg/nielsen_paths.hpp"

namespace iwg {

enum class MoveKind { extension, switch_move };

std::string to_string(MoveKind k);

// (g_k; G_{k-1}, G_k)
struct GeneratingTriple {
  NielsenGenerator generator;
  LttStructure source;
  LttStructure target;
  MoveKind kind;
  // Purple edge [d^a_k, d_{k,l}] of the target.
  Turn determining_edge;

  bool operator==(const GeneratingTriple&) const = default;
};

// The move determined by a purple edge of `target` at d^a.  Nothing if the
// edge is not such an edge, or if the source fails the axioms or is not
// birecurrent.
std::optional<GeneratingTriple> extension(const LttStructure& target,
                                          const Turn& determining_edge);
std::optional<GeneratingTriple> switch_move(const LttStructure& target,
                                            const Turn& determining_edge);

// All admissible predecessors: for each purple edge at d^a in sorted order,
// the extension and then the switch.
std::vector<GeneratingTriple> predecessors(const LttStructure& target);

// gtII and gtIII: red data of the target matches the generator, and D^T g_k
// restricts to an isomorphism of purple graphs.
bool is_generating_triple(const GeneratingTriple& t);

// Chained, each triple a generating triple with u(k-1) in {u(k), a(k)}, each
// structure valid and birecurrent.  With native_rank > 0 the axioms and
// birecurrence are checked on the restriction to that rank, as for extended
// compositions.
bool admissible_composition_check(const std::vector<GeneratingTriple>& seq,
                                  int native_rank = 0);

// Generators extended by the identity, structures by purple vertices and
// black edges for the new labels.
std::vector<GeneratingTriple> extend_composition(
    const std::vector<GeneratingTriple>& seq, int rank);

struct DiagramArrow {
  int source;
  int target;
  GeneratingTriple triple;
};

struct IdDiagram {
  // Every structure reached; nodes[0] is the seed.
  std::vector<LttStructure> nodes;
  std::vector<DiagramArrow> arrows;
  // Strongly connected component of each node.
  std::vector<int> component;
  // Nodes and arrows of the seed's component, in index order.
  std::vector<int> seed_nodes;
  std::vector<int> seed_arrows;
  // Components with at least one arrow inside.
  int nontrivial_components = 0;
  // The node budget ran out; the seed component may be incomplete.
  bool truncated = false;

  bool contains(const LttStructure& s) const;
  int index_of(const LttStructure& s) const;
};

// Explores predecessors backward from the seed, then keeps the strongly
// connected pieces.  A nonzero shuffle seed permutes the exploration order.
IdDiagram build_id_diagram(const LttStructure& seed,
                           std::size_t node_budget = 100000,
                           std::uint64_t shuffle_seed = 0);

// Walks the decomposition backward from the structure it ends at.  Nothing
// if some predecessor is missing or the walk does not close up.
std::optional<std::vector<GeneratingTriple>> realizing_loop(
    const Decomposition& d, const LttStructure& end);

// Shortest arrow path inside the seed component, as triples.
std::optional<std::vector<GeneratingTriple>> diagram_path(const IdDiagram& id,
                                                          int from, int to);

// The realizing loop followed by a detour seed -> node -> seed.
std::optional<std::vector<GeneratingTriple>> loop_through(
    const IdDiagram& id, const std::vector<GeneratingTriple>& base, int node);

Decomposition loop_decomposition(const std::vector<GeneratingTriple>& loop);

struct LoopCertificate {
  bool granted = false;
  std::string reason;
  Decomposition decomposition;
  int exponent = 1;
  bool admissible = false;
  bool train_track = false;
  // Purple edges of G_0 are closure turns between periodic directions.
  bool condition_a = false;
  // The transition matrix is irreducible.
  bool condition_b = false;
  // No periodic Nielsen paths.
  bool condition_c = false;
  // build_ltt of the composite is G_0.
  bool ltt_matches = false;
  std::optional<PnpCertificate> pnp;
};

LoopCertificate check_representative_loop(
    const std::vector<GeneratingTriple>& loop, const SearchBounds& bounds = {});

}  // namespace iwg

#endif  // IWG_DIAGRAM_HPP_
