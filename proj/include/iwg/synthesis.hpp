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

// Gluing two achieved ltt structures along shared labels, and the tower of
// glued maps that realizes a cut vertex in every rank r >= 3.

#ifndef IWG_SYNTHESIS_HPP_
#define IWG_SYNTHESIS_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iwg/labeled_graph.hpp"
#include "iwg/ltt.hpp"
#include "iwg/nielsen.hpp"
#include "iwg/nielsen_paths.hpp"
#include "iwg/whitehead.hpp"

namespace iwg {

// Both structures must have the red edge [X_1, X_2] = [a, b] with the same
// red vertex, and `shared` (edge indices, 0-based) must contain 0 and 1.
struct GluingSpec {
  Decomposition left;
  LttStructure left_ltt;
  Decomposition right;
  LttStructure right_ltt;
  std::set<int> shared{0, 1};
};

// r' + r'' - k
int glued_rank(const GluingSpec& spec);

// Shared right indices stay put; the others go in increasing order to
// r', r' + 1, ...  Throws SpecError on a malformed spec.
PairPermutation right_relabeling(const GluingSpec& spec);

LttStructure relabel(const LttStructure& s, const PairPermutation& p);

// Union of the colored graphs over the shared labels, without the red edge
// and the then isolated red vertex.
ColoredPairLabeledGraph glue_graphs(const GluingSpec& spec);

struct GlueResult {
  int rank = 0;
  // Left extended by the identity, then the relabeled right.
  Decomposition composite;
  // Powers applied to the inputs first.
  int left_power = 1;
  int right_power = 1;
  ColoredPairLabeledGraph glued;
  ColoredPairLabeledGraph ideal;
  std::optional<PnpCertificate> pnp;
  bool admissible = false;         // (i)
  bool irreducible = false;        // (ii)
  bool turns_taken = false;        // (iii)
  bool pnp_free = false;           // (iv)
  bool ideal_matches = false;      // (v)
  bool granted = false;
  // Names the first failing check.
  std::string failure;
};

GlueResult realize_glued(const GluingSpec& spec,
                         const SearchBounds& bounds = {});

// Smallest m <= 12 with the m-th power rotationless and strictly
// irreducible, or nothing.
std::optional<int> normalizing_power(const Decomposition& d);

// The nine-generator rank-3 example.
Decomposition nine_step_example();

struct PipelineResult {
  int rank = 0;
  Decomposition decomposition;
  std::optional<PnpCertificate> pnp;
  ColoredPairLabeledGraph ideal;
  std::vector<HalfInteger> index;
  std::set<Direction> cut;
  // Vertices carrying the shared labels of the last gluing.
  std::set<Direction> glued_labels;
  std::vector<GlueResult> stages;

  bool train_track = false;
  bool expanding = false;
  bool irreducible = false;
  bool cyclically_admissible = false;
  bool pnp_free = false;
  bool iw_connected = false;
  bool iw_vertex_count = false;
  bool cut_vertex = false;
  bool cut_at_glued = false;
  bool index_ok = false;

  bool granted() const;
};

// r = 3 is the square of the example; each higher rank glues one more
// relabeled copy of it onto the previous stage.
PipelineResult cut_vertex_pipeline(int rank, const SearchBounds& bounds = {});

}  // namespace iwg

#endif  // IWG_SYNTHESIS_HPP_
