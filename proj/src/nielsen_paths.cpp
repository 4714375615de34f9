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

#include "iwg/nielsen_paths.hpp"

#include <algorithm>

#include "iwg/error.hpp"
#include "iwg/profile.hpp"

namespace iwg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NoneLegalized:
      return "NoneLegalized";
    case Verdict::Found:
      return "Found";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string to_string(BranchFate f) {
  switch (f) {
    case BranchFate::legalized:
      return "legalized";
    case BranchFate::no_extension:
      return "no-extension";
    case BranchFate::found:
      return "found";
    case BranchFate::cut_off:
      return "cut-off";
    case BranchFate::open:
      return "open";
  }
  return "?";
}

namespace {

using Letters = std::vector<Direction>;

struct State {
  BranchTrace trace;
  Letters p, q, rp, rq;
};

class Engine {
 public:
  Engine(const std::vector<GraphMap>& steps, const SearchBounds& bounds)
      : bounds_(bounds) {
    if (steps.empty()) {
      throw Error("the search needs at least one step");
    }
    rank_ = steps.front().rank();
    MapProfile composite = MapProfile::identity(rank_);
    for (const GraphMap& s : steps) {
      if (s.rank() != rank_) {
        throw RankError("search steps of different ranks");
      }
      composite = compose(MapProfile::of(s), composite);
    }
    if (!is_train_track(composite)) {
      throw NotTrainTrack("composite is not a train track map");
    }
    exponent_ = rotationless_power(composite).exponent;
    for (int i = 0; i < exponent_; ++i) {
      steps_.insert(steps_.end(), steps.begin(), steps.end());
    }
    composite = power(composite, exponent_);
    dg_ = composite.direction_map();
    max_len_ = bounds.max_len;
    if (max_len_ == 0) {
      std::uint64_t total = composite.total_length();
      max_len_ = total > TransitionMatrix::kSaturated / 4
                     ? TransitionMatrix::kSaturated
                     : 4 * total;
    }
    int n = static_cast<int>(steps_.size());
    rest_.assign(n + 1, DirectionMap::identity(rank_));
    for (int k = n - 1; k >= 0; --k) {
      rest_[k] = compose(rest_[k + 1], steps_[k].direction_map());
    }
    memo_.resize(bounds.max_passes * n + 1);
  }

  SearchResult run() {
    SearchResult result;
    int n = static_cast<int>(steps_.size());
    result.steps_per_pass = n;
    result.rotationless_exponent = exponent_;
    result.max_len = max_len_;

    std::vector<State> frontier;
    for (Direction a : all_directions(rank_)) {
      for (Direction b : all_directions(rank_)) {
        if (!(a < b) || !illegal_at(0, Turn(a, b))) {
          continue;
        }
        State s;
        s.trace.start = Turn(a, b);
        s.p = s.rp = {a};
        s.q = s.rq = {b};
        normalize(std::move(s), 0, false, frontier, result);
      }
    }
    int total = bounds_.max_passes * n;
    for (int step = 0; step < total && !frontier.empty(); ++step) {
      std::vector<State> next;
      const GraphMap& g = steps_[step % n];
      for (State& s : frontier) {
        std::vector<Direction> rp = g.substitute(Word::reduce(s.rp));
        std::vector<Direction> rq = g.substitute(Word::reduce(s.rq));
        s.rp = Word::reduce(rp).letters();
        s.rq = Word::reduce(rq).letters();
        normalize(std::move(s), step + 1, true, next, result);
      }
      if ((step + 1) % n == 0) {
        int passes = (step + 1) / n;
        std::vector<State> keep;
        for (State& s : next) {
          if (s.rp == s.p && s.rq == s.q && verify(s, passes)) {
            finish(s, BranchFate::found, step + 1, result);
            if (!result.rho) {
              result.rho = Word::reduce(s.p).inverse() * Word::reduce(s.q);
              result.period = passes;
            }
          } else {
            keep.push_back(std::move(s));
          }
        }
        next = std::move(keep);
      }
      frontier = std::move(next);
      if (frontier.size() > bounds_.max_frontier) {
        for (State& s : frontier) {
          finish(s, BranchFate::cut_off, step + 1, result);
        }
        frontier.clear();
      }
    }
    for (State& s : frontier) {
      finish(s, BranchFate::open, total, result);
    }

    bool found = false;
    bool unsettled = false;
    for (const BranchTrace& b : result.branches) {
      found = found || b.fate == BranchFate::found;
      unsettled = unsettled || b.fate == BranchFate::cut_off ||
                  b.fate == BranchFate::open;
    }
    result.verdict = found       ? Verdict::Found
                     : unsettled ? Verdict::Inconclusive
                                 : Verdict::NoneLegalized;
    return result;
  }

 private:
  // The turn is collapsed by what remains of the sequence after `step`
  // generators, or is sent to a turn illegal for the composite.
  bool illegal_at(int step, const Turn& t) const {
    const DirectionMap& rest = rest_[step % steps_.size()];
    Turn image = rest(t);
    return image.degenerate() || is_illegal(dg_, image);
  }

  bool legal_extension(Direction last, Direction e) const {
    return e != last.bar() && !is_illegal(dg_, Turn(last.bar(), e));
  }

  // g_{k,1}(e), or nullptr past the remainder bound.
  const Letters* prefix_image(int k, Direction e) {
    auto& row = memo_[k];
    if (row.empty()) {
      row.resize(2 * rank_);
    }
    auto& slot = row[e.code()];
    if (!slot) {
      if (k == 0) {
        slot = Letters{e};
      } else {
        const Letters* prev = prefix_image(k - 1, e);
        if (prev == nullptr) {
          return nullptr;
        }
        const GraphMap& g = steps_[(k - 1) % steps_.size()];
        slot = g.apply(Word::reduce(*prev)).letters();
      }
    }
    if (slot->size() > bounds_.max_remainder) {
      return nullptr;
    }
    return &*slot;
  }

  void finish(State& s, BranchFate fate, int step, SearchResult& result) {
    s.trace.fate = fate;
    s.trace.death_step = step;
    s.trace.rho1 = Word::reduce(s.p);
    s.trace.rho2 = Word::reduce(s.q);
    if (!s.rp.empty() && !s.rq.empty()) {
      s.trace.final_turn = Turn(s.rp.front(), s.rq.front());
    }
    result.deepest_step = std::max(result.deepest_step, step);
    result.branches.push_back(std::move(s.trace));
  }

  bool verify(const State& s, int passes) const {
    Word rho = Word::reduce(s.p).inverse() * Word::reduce(s.q);
    Word w = rho;
    for (int i = 0; i < passes; ++i) {
      for (const GraphMap& g : steps_) {
        w = g.apply(w);
        if (w.size() > bounds_.max_remainder) {
          return false;
        }
      }
    }
    return w == rho;
  }

  void normalize(State s, int step, bool applied, std::vector<State>& alive,
                 SearchResult& result) {
    std::size_t i = 0;
    while (i < s.rp.size() && i < s.rq.size() && s.rp[i] == s.rq[i]) {
      ++i;
    }
    s.rp.erase(s.rp.begin(), s.rp.begin() + i);
    s.rq.erase(s.rq.begin(), s.rq.begin() + i);
    if (!s.rp.empty() && !s.rq.empty()) {
      if (illegal_at(step, Turn(s.rp.front(), s.rq.front()))) {
        alive.push_back(std::move(s));
      } else if (applied) {
        finish(s, BranchFate::legalized, step, result);
      }
      return;
    }
    if (s.p.size() > max_len_ || s.q.size() > max_len_) {
      finish(s, BranchFate::cut_off, step, result);
      return;
    }
    bool extend_p = s.rp.empty();
    Direction last = extend_p ? s.p.back() : s.q.back();
    std::size_t before = alive.size() + result.branches.size();
    for (Direction e : all_directions(rank_)) {
      if (!legal_extension(last, e)) {
        continue;
      }
      const Letters* image = prefix_image(step, e);
      State t = s;
      t.trace.extensions.push_back(Extension{extend_p ? 'P' : 'Q', e, step});
      if (image == nullptr) {
        finish(t, BranchFate::cut_off, step, result);
        continue;
      }
      Letters& side = extend_p ? t.p : t.q;
      Letters& rest = extend_p ? t.rp : t.rq;
      side.push_back(e);
      rest.insert(rest.end(), image->begin(), image->end());
      normalize(std::move(t), step, false, alive, result);
    }
    if (applied && alive.size() + result.branches.size() == before) {
      finish(s, BranchFate::no_extension, step, result);
    }
  }

  SearchBounds bounds_;
  int rank_ = 0;
  int exponent_ = 1;
  std::vector<GraphMap> steps_;
  DirectionMap dg_;
  std::uint64_t max_len_ = 0;
  std::vector<DirectionMap> rest_;
  std::vector<std::vector<std::optional<Letters>>> memo_;
};

std::vector<GraphMap> step_maps(const Decomposition& d) {
  std::vector<GraphMap> out;
  for (const NielsenGenerator& n : d.effective_steps()) {
    out.push_back(n.to_map(d.rank()));
  }
  return out;
}

}  // namespace

SearchResult search_inps(const std::vector<GraphMap>& steps,
                         const SearchBounds& bounds) {
  return Engine(steps, bounds).run();
}

SearchResult search_inps(const GraphMap& g, const SearchBounds& bounds) {
  return search_inps(std::vector<GraphMap>{g}, bounds);
}

SearchResult search_inps(const Decomposition& d, const SearchBounds& bounds) {
  return search_inps(step_maps(d), bounds);
}

bool is_legalizing_prevention_sequence(const Decomposition& d,
                                       SearchResult* trace) {
  if (d.empty()) {
    return false;
  }
  MapProfile p = MapProfile::of(d);
  if (!is_expanding(p.transition_matrix()) || !is_train_track(p) ||
      rotationless_power(p).exponent != 1) {
    return false;
  }
  SearchBounds one;
  one.max_passes = 1;
  SearchResult r = search_inps(d, one);
  bool ok = r.verdict == Verdict::NoneLegalized &&
            std::all_of(r.branches.begin(), r.branches.end(),
                        [](const BranchTrace& b) {
                          return b.fate == BranchFate::legalized;
                        });
  if (trace != nullptr) {
    *trace = std::move(r);
  }
  return ok;
}

std::string fingerprint(const Decomposition& d) {
  return "rank " + std::to_string(d.rank()) + ": " + d.to_string();
}

std::optional<PnpCertificate> certify_pnp_free(const Decomposition& d,
                                               const SearchBounds& bounds) {
  if (d.empty() || !is_train_track(d)) {
    return std::nullopt;
  }
  for (int m = 1; m <= 2; ++m) {
    Decomposition dm = d.power(m);
    SearchResult r = search_inps(dm, bounds);
    if (r.verdict == Verdict::NoneLegalized) {
      PnpCertificate c;
      c.fingerprint = fingerprint(d);
      c.power = m;
      c.legalizing = is_legalizing_prevention_sequence(dm);
      c.search = std::move(r);
      return c;
    }
    if (r.verdict == Verdict::Found) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool certifies(const PnpCertificate& c, const Decomposition& d) {
  return c.fingerprint == fingerprint(d);
}

}  // namespace iwg
