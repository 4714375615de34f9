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

#include "iwg/synthesis.hpp"

#include <algorithm>

#include "iwg/error.hpp"
#include "iwg/profile.hpp"

namespace iwg {

namespace {

constexpr int kMaxNormalizingPower = 12;

void check_spec(const GluingSpec& spec) {
  if (!spec.shared.count(0) || !spec.shared.count(1)) {
    throw SpecError("shared labels must include X_1 and X_2");
  }
  int r1 = spec.left.rank();
  int r2 = spec.right.rank();
  if (spec.left_ltt.rank() != r1 || spec.right_ltt.rank() != r2) {
    throw SpecError("structure ranks differ from decomposition ranks");
  }
  for (int i : spec.shared) {
    if (i < 0 || i >= std::min(r1, r2)) {
      throw SpecError("shared index " + std::to_string(i) +
                      " is not a label of both sides");
    }
  }
  Turn want(Direction::positive(0), Direction::positive(1));
  for (const LttStructure* s : {&spec.left_ltt, &spec.right_ltt}) {
    try {
      if (s->red_edge() != want) {
        throw SpecError("red edge " + s->red_edge().to_string() +
                        " is not [X_1, X_2]");
      }
    } catch (const SpecError&) {
      throw;
    } catch (const Error& e) {
      throw SpecError(e.what());
    }
  }
  if (spec.left_ltt.red_vertex() != spec.right_ltt.red_vertex()) {
    throw SpecError("red vertices differ");
  }
}

}  // namespace

int glued_rank(const GluingSpec& spec) {
  return spec.left.rank() + spec.right.rank() -
         static_cast<int>(spec.shared.size());
}

PairPermutation right_relabeling(const GluingSpec& spec) {
  check_spec(spec);
  int next = spec.left.rank();
  std::vector<Direction> images;
  for (int i = 0; i < spec.right.rank(); ++i) {
    images.push_back(Direction::positive(spec.shared.count(i) ? i : next++));
  }
  return PairPermutation(glued_rank(spec), std::move(images));
}

LttStructure relabel(const LttStructure& s, const PairPermutation& p) {
  return s.relabeled(p);
}

ColoredPairLabeledGraph glue_graphs(const GluingSpec& spec) {
  PairPermutation right = right_relabeling(spec);
  int r = glued_rank(spec);
  ColoredPairLabeledGraph out =
      spec.left_ltt.colored_graph().relabeled(
          PairPermutation::inclusion(spec.left.rank(), r));
  ColoredPairLabeledGraph other = spec.right_ltt.colored_graph().relabeled(right);
  for (const auto& [d, c] : other.vertices()) {
    if (!out.has_vertex(d)) {
      out.add_vertex(d, c);
    }
  }
  for (const Edge& e : other.edges()) {
    out.add_edge(e.ends.first(), e.ends.second(), e.color);
  }
  Direction red = spec.left_ltt.red_vertex();
  for (const Edge& e : other.edges()) {
    if (e.color == Color::red) {
      out.remove_edge(e);
    }
  }
  ColoredPairLabeledGraph left = spec.left_ltt.colored_graph();
  for (const Edge& e : left.edges()) {
    if (e.color == Color::red) {
      out.remove_edge(e);
    }
  }
  if (out.valence(red) == 0) {
    out.remove_vertex(red);
  }
  return out;
}

std::optional<int> normalizing_power(const Decomposition& d) {
  MapProfile p = MapProfile::of(d);
  MapProfile q = p;
  for (int m = 1; m <= kMaxNormalizingPower; ++m) {
    if (rotationless_power(q).exponent == 1 &&
        is_strictly_irreducible(q.transition_matrix())) {
      return m;
    }
    q = compose(p, q);
  }
  return std::nullopt;
}

GlueResult realize_glued(const GluingSpec& spec, const SearchBounds& bounds) {
  check_spec(spec);
  GlueResult out;
  out.rank = glued_rank(spec);
  auto lp = normalizing_power(spec.left);
  auto rp = normalizing_power(spec.right);
  if (!lp || !rp) {
    out.failure = "no power up to 12 is rotationless and strictly irreducible";
    return out;
  }
  out.left_power = *lp;
  out.right_power = *rp;
  PairPermutation right = right_relabeling(spec);
  out.composite = spec.left.power(*lp)
                      .extended(out.rank)
                      .then(spec.right.power(*rp).relabeled(right));
  out.glued = glue_graphs(spec);

  out.admissible = is_cyclically_admissible(out.composite);
  MapProfile p = MapProfile::of(out.composite);
  out.irreducible =
      is_strictly_irreducible(power(p.transition_matrix(), 2));
  TurnClosure closure = TurnClosure::of(p);
  const DirectionMap& dg = p.direction_map();
  out.turns_taken = true;
  for (const Edge& e : out.glued.edges()) {
    if (!closure.contains(e.ends) || !dg.is_periodic(e.ends.first()) ||
        !dg.is_periodic(e.ends.second())) {
      out.turns_taken = false;
    }
  }
  if (is_train_track(p) && is_expanding(p.transition_matrix())) {
    out.pnp = certify_pnp_free(out.composite, bounds);
  }
  out.pnp_free = out.pnp.has_value();
  if (out.pnp_free) {
    out.ideal = ideal_whitehead_graph(out.composite, &*out.pnp);
    out.ideal_matches =
        is_isomorphic(out.ideal, out.glued, LabelMode::exact, true);
  }
  out.granted = out.admissible && out.irreducible && out.turns_taken &&
                out.pnp_free && out.ideal_matches;
  if (!out.granted) {
    out.failure = !out.admissible    ? "(i) sequence is not cyclically admissible"
                  : !out.irreducible ? "(ii) square is not strictly irreducible"
                  : !out.turns_taken ? "(iii) a glued edge is not a taken periodic turn"
                  : !out.pnp_free    ? "(iv) no Nielsen path certificate"
                                     : "(v) ideal Whitehead graph differs from the glued graph";
  }
  return out;
}

Decomposition nine_step_example() {
  static const char* const kSteps[] = {
      "a->ab-", "b->a-b", "c->cb-", "c->ca",  "b->c-b",
      "a->ab-", "a->ac",  "b->a-b", "b->c-b",
  };
  std::vector<NielsenGenerator> steps;
  for (const char* s : kSteps) {
    steps.push_back(NielsenGenerator::parse(s, 3));
  }
  return Decomposition(3, std::move(steps));
}

bool PipelineResult::granted() const {
  return train_track && expanding && irreducible && cyclically_admissible &&
         pnp_free && iw_connected && iw_vertex_count && cut_vertex &&
         cut_at_glued && index_ok;
}

PipelineResult cut_vertex_pipeline(int rank, const SearchBounds& bounds) {
  if (rank < 3) {
    throw RankError("the construction starts in rank 3");
  }
  if (rank > kMaxRank) {
    throw RankError("rank " + std::to_string(rank) + " out of range");
  }
  PipelineResult out;
  out.rank = rank;
  Decomposition base = nine_step_example().power(2);
  if (rank == 3) {
    out.decomposition = base;
    out.pnp = certify_pnp_free(base, bounds);
  } else {
    // Put the red edge of the rank-3 structure at [a, b].
    PairPermutation sigma(3, {Direction::positive(2), Direction::positive(0),
                              Direction::positive(1)});
    Decomposition unit = base.relabeled(sigma);
    auto unit_cert = certify_pnp_free(unit, bounds);
    if (!unit_cert) {
      throw Error("the rank-3 building block has no certificate");
    }
    LttStructure unit_ltt = build_ltt(unit, *unit_cert);
    Decomposition left = unit;
    LttStructure left_ltt = unit_ltt;
    for (int r = 4; r <= rank; ++r) {
      GluingSpec spec{left, left_ltt, unit, unit_ltt, {0, 1}};
      GlueResult stage = realize_glued(spec, bounds);
      out.glued_labels.clear();
      PairPermutation right = right_relabeling(spec);
      for (int i : spec.shared) {
        for (Direction d : {Direction::positive(i), Direction::negative(i)}) {
          if (stage.glued.has_vertex(right(d))) {
            out.glued_labels.insert(right(d));
          }
        }
      }
      out.stages.push_back(stage);
      if (!stage.granted) {
        out.decomposition = stage.composite;
        out.pnp = stage.pnp;
        break;
      }
      left = stage.composite;
      left_ltt = build_ltt(left, *stage.pnp);
      out.decomposition = left;
      out.pnp = stage.pnp;
    }
  }
  MapProfile p = MapProfile::of(out.decomposition);
  out.train_track = is_train_track(p);
  out.expanding = is_expanding(p.transition_matrix());
  out.irreducible = is_irreducible(p.transition_matrix());
  out.cyclically_admissible = is_cyclically_admissible(out.decomposition);
  out.pnp_free = out.pnp.has_value();
  if (out.pnp_free && out.train_track) {
    out.ideal = ideal_whitehead_graph(out.decomposition, &*out.pnp);
    out.index = index_list(out.ideal);
    out.cut = cut_vertices(out.ideal);
    out.iw_connected = connected_components(out.ideal).size() == 1;
    out.iw_vertex_count =
        static_cast<int>(out.ideal.vertex_count()) == 2 * rank - 1;
    out.cut_vertex = !out.cut.empty();
    out.cut_at_glued =
        rank == 3 || std::any_of(out.cut.begin(), out.cut.end(),
                                 [&](Direction d) {
                                   return out.glued_labels.count(d) > 0;
                                 });
    out.index_ok =
        out.index == std::vector<HalfInteger>{HalfInteger::from_twice(3 - 2 * rank)};
  }
  return out;
}

}  // namespace iwg
