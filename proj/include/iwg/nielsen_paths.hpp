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

// Branching search for indivisible Nielsen paths.
//
// A candidate iNP is rho = bar(rho1) rho2 with rho1, rho2 legal and the turn
// between them illegal.  The search pushes both halves through the steps of
// the decomposition one generator at a time, cancels their common prefix,
// and extends an exhausted half by a further edge whenever needed.  A branch
// dies once the junction turn becomes legal for the rest of the sequence;
// a branch whose halves come back to themselves after whole passes is a
// periodic Nielsen path.

#ifndef IWG_NIELSEN_PATHS_HPP_
#define IWG_NIELSEN_PATHS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "iwg/direction.hpp"
#include "iwg/graph_map.hpp"
#include "iwg/nielsen.hpp"

namespace iwg {

struct SearchBounds {
  int max_passes = 3;
  // Longest allowed rho1 or rho2.  0 selects 4 * (total image length).
  std::uint64_t max_len = 0;
  // Longest allowed image remainder, in letters.
  std::size_t max_remainder = std::size_t{1} << 22;
  // Live branches allowed at once.
  std::size_t max_frontier = 100000;
};

enum class Verdict { NoneLegalized, Found, Inconclusive };

std::string to_string(Verdict v);

struct Extension {
  // 'P' extends rho1, 'Q' extends rho2.
  char side;
  Direction edge;
  // Generators applied when the edge was added.
  int step;

  bool operator==(const Extension&) const = default;
};

enum class BranchFate {
  // The junction turn became legal.
  legalized,
  // No legal edge could continue an exhausted half.
  no_extension,
  // The halves returned to themselves.
  found,
  // A bound was hit.
  cut_off,
  // Still alive when the passes ran out.
  open,
};

std::string to_string(BranchFate f);

struct BranchTrace {
  Turn start{Direction(), Direction()};
  Word rho1;
  Word rho2;
  std::vector<Extension> extensions;
  BranchFate fate = BranchFate::open;
  // Generators applied when the branch ended.
  int death_step = 0;
  // Junction turn at the end, when both remainders are nonempty.
  std::optional<Turn> final_turn;
};

struct SearchResult {
  Verdict verdict = Verdict::Inconclusive;
  // Every branch in exploration order.
  std::vector<BranchTrace> branches;
  // For Found: rho = bar(rho1) rho2 and the number of passes fixing it.
  std::optional<Word> rho;
  int period = 0;
  // Steps in one pass, after the rotationless power was taken.
  int steps_per_pass = 0;
  int rotationless_exponent = 1;
  // Largest step count reached by any branch.
  int deepest_step = 0;
  std::uint64_t max_len = 0;
};

// The steps are applied first to last; the composite must be a train track
// map (NotTrainTrack otherwise).  The sequence is repeated to its rotationless
// power first.
SearchResult search_inps(const std::vector<GraphMap>& steps,
                         const SearchBounds& bounds = {});
SearchResult search_inps(const GraphMap& g, const SearchBounds& bounds = {});
SearchResult search_inps(const Decomposition& d,
                         const SearchBounds& bounds = {});

// Every branch is legalized within a single pass and no power was needed.
bool is_legalizing_prevention_sequence(const Decomposition& d,
                                       SearchResult* trace = nullptr);

// Proof that a decomposition represents a map with no periodic Nielsen
// paths: a NoneLegalized search of d^power.
struct PnpCertificate {
  std::string fingerprint;
  int power = 1;
  bool legalizing = false;
  SearchResult search;
};

// Rank plus effective steps; stable across runs.
std::string fingerprint(const Decomposition& d);

// Searches d, then d^2.  Nothing if neither search comes back NoneLegalized.
std::optional<PnpCertificate> certify_pnp_free(const Decomposition& d,
                                               const SearchBounds& bounds = {});

bool certifies(const PnpCertificate& c, const Decomposition& d);

}  // namespace iwg

#endif  // IWG_NIELSEN_PATHS_HPP_
