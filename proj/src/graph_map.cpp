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

#include "iwg/graph_map.hpp"

#include <algorithm>
#include <functional>

#include "iwg/error.hpp"

namespace iwg {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? TransitionMatrix::kSaturated : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) {
    return 0;
  }
  if (a > TransitionMatrix::kSaturated / b) {
    return TransitionMatrix::kSaturated;
  }
  return a * b;
}

// Tarjan over the transition digraph j -> i for m(i, j) > 0.  Returns the
// component id of every vertex; ids are in reverse topological order.
std::vector<int> transition_components(const TransitionMatrix& m,
                                       int* count) {
  int n = m.rank();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;
  int next_comp = 0;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 0; w < n; ++w) {
      if (m(w, v) == 0) {
        continue;
      }
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) {
      visit(v);
    }
  }
  *count = next_comp;
  return comp;
}

}  // namespace

DirectionMap::DirectionMap(std::vector<Direction> images)
    : images_(std::move(images)) {
  if (images_.size() % 2 != 0) {
    throw RankError("direction map needs an even number of directions");
  }
  for (Direction d : images_) {
    if (d.code() >= static_cast<int>(images_.size())) {
      throw InvalidLetter("direction image " + d.to_string() +
                          " out of range");
    }
  }
}

DirectionMap DirectionMap::identity(int rank) {
  return DirectionMap(all_directions(rank));
}

std::vector<Direction> DirectionMap::missing() const {
  std::vector<int> hits(images_.size(), 0);
  for (Direction d : images_) {
    ++hits[d.code()];
  }
  std::vector<Direction> out;
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c] == 0) {
      out.push_back(Direction::from_code(static_cast<int>(c)));
    }
  }
  return out;
}

std::vector<Direction> DirectionMap::doubled() const {
  std::vector<int> hits(images_.size(), 0);
  for (Direction d : images_) {
    ++hits[d.code()];
  }
  std::vector<Direction> out;
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c] >= 2) {
      out.push_back(Direction::from_code(static_cast<int>(c)));
    }
  }
  return out;
}

int DirectionMap::period(Direction d) const {
  // Any orbit of a self-map of n points is on its cycle after n steps.
  Direction x = d;
  std::size_t n = images_.size();
  for (std::size_t i = 0; i < n; ++i) {
    x = (*this)(x);
    if (x == d) {
      return static_cast<int>(i + 1);
    }
  }
  return 0;
}

bool DirectionMap::is_periodic(Direction d) const { return period(d) > 0; }

std::vector<Direction> DirectionMap::periodic() const {
  std::vector<Direction> out;
  for (std::size_t c = 0; c < images_.size(); ++c) {
    Direction d = Direction::from_code(static_cast<int>(c));
    if (is_periodic(d)) {
      out.push_back(d);
    }
  }
  return out;
}

DirectionMap compose(const DirectionMap& outer, const DirectionMap& inner) {
  if (outer.rank() != inner.rank()) {
    throw RankError("composing direction maps of different ranks");
  }
  std::vector<Direction> images;
  images.reserve(inner.images().size());
  for (Direction d : inner.images()) {
    images.push_back(outer(d));
  }
  return DirectionMap(std::move(images));
}

bool is_illegal(const DirectionMap& dg, const Turn& t, int p_max) {
  if (p_max <= 0) {
    p_max = 4 * dg.rank();
  }
  Direction a = t.first();
  Direction b = t.second();
  if (a == b) {
    return true;
  }
  for (int p = 1; p <= p_max; ++p) {
    a = dg(a);
    b = dg(b);
    if (a == b) {
      return true;
    }
  }
  return false;
}

TransitionMatrix::TransitionMatrix(int rank)
    : rank_(rank), cells_(static_cast<std::size_t>(rank) * rank, 0) {}

TransitionMatrix TransitionMatrix::identity(int rank) {
  TransitionMatrix m(rank);
  for (int i = 0; i < rank; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

std::uint64_t TransitionMatrix::column_sum(int j) const {
  std::uint64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    s = sat_add(s, (*this)(i, j));
  }
  return s;
}

bool TransitionMatrix::all_positive() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](std::uint64_t c) { return c > 0; });
}

TransitionMatrix operator*(const TransitionMatrix& lhs,
                           const TransitionMatrix& rhs) {
  if (lhs.rank_ != rhs.rank_) {
    throw RankError("multiplying transition matrices of different ranks");
  }
  int n = lhs.rank_;
  TransitionMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      std::uint64_t a = lhs(i, k);
      if (a == 0) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        out.at(i, j) = sat_add(out(i, j), sat_mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

TransitionMatrix power(const TransitionMatrix& m, int exponent) {
  TransitionMatrix out = TransitionMatrix::identity(m.rank());
  for (int i = 0; i < exponent; ++i) {
    out = out * m;
  }
  return out;
}

bool is_irreducible(const TransitionMatrix& m) {
  if (m.rank() == 0) {
    return false;
  }
  int count = 0;
  transition_components(m, &count);
  if (count != 1) {
    return false;
  }
  // A single vertex is strongly connected only through a self-loop.
  return m.rank() > 1 || m(0, 0) > 0;
}

bool is_strictly_irreducible(const TransitionMatrix& m) {
  return m.rank() > 0 && m.all_positive();
}

bool is_expanding(const TransitionMatrix& m) {
  int n = m.rank();
  if (n == 0) {
    return false;
  }
  int count = 0;
  std::vector<int> comp = transition_components(m, &count);
  // A component traps bounded length iff it is a closed unit cycle: cyclic and
  // every member maps to exactly one letter.
  std::vector<int> size(count, 0);
  std::vector<bool> cyclic(count, false), unit(count, true);
  for (int v = 0; v < n; ++v) {
    ++size[comp[v]];
    if (m(v, v) > 0) {
      cyclic[comp[v]] = true;
    }
    if (m.column_sum(v) != 1) {
      unit[comp[v]] = false;
    }
  }
  for (int c = 0; c < count; ++c) {
    if (size[c] > 1) {
      cyclic[c] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (m.column_sum(j) == 0) {
      return false;
    }
    std::vector<bool> seen(n, false);
    std::vector<int> todo{j};
    seen[j] = true;
    bool grows = false;
    while (!todo.empty() && !grows) {
      int v = todo.back();
      todo.pop_back();
      if (cyclic[comp[v]] && !unit[comp[v]]) {
        grows = true;
      }
      for (int w = 0; w < n; ++w) {
        if (m(w, v) > 0 && !seen[w]) {
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
    if (!grows) {
      return false;
    }
  }
  return true;
}

GraphMap::GraphMap(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (rank < 1 || rank > kMaxRank) {
    throw RankError("rank " + std::to_string(rank) + " out of range");
  }
  if (static_cast<int>(images_.size()) != rank) {
    throw RankError("graph map of rank " + std::to_string(rank) + " given " +
                    std::to_string(images_.size()) + " edge images");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) {
      throw Error("edge " + Direction::positive(static_cast<int>(i)).to_string() +
                  " has an empty image");
    }
    if (images_[i].max_edge() >= rank) {
      throw InvalidLetter("image of edge " +
                          Direction::positive(static_cast<int>(i)).to_string() +
                          " uses a letter outside rank " +
                          std::to_string(rank));
    }
  }
}

GraphMap GraphMap::identity(int rank) {
  std::vector<Word> images;
  for (int i = 0; i < rank; ++i) {
    images.push_back(Word::of(Direction::positive(i)));
  }
  return GraphMap(rank, std::move(images));
}

GraphMap GraphMap::parse(int rank, const std::vector<std::string>& images) {
  std::vector<Word> words;
  for (const std::string& s : images) {
    words.push_back(Word::parse(s, rank));
  }
  return GraphMap(rank, std::move(words));
}

Word GraphMap::image(Direction d) const {
  const Word& w = images_[d.edge()];
  return d.inverted() ? w.inverse() : w;
}

std::vector<Direction> GraphMap::substitute(const Word& w) const {
  if (w.max_edge() >= rank_) {
    throw RankError("word " + w.to_string() + " is not in rank " +
                    std::to_string(rank_));
  }
  std::vector<Direction> out;
  for (Direction d : w) {
    const Word& img = images_[d.edge()];
    if (d.inverted()) {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push_back(it->bar());
      }
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return out;
}

Word GraphMap::apply(const Word& w) const { return Word::reduce(substitute(w)); }

DirectionMap GraphMap::direction_map() const {
  std::vector<Direction> images;
  for (Direction d : all_directions(rank_)) {
    const Word& w = images_[d.edge()];
    images.push_back(d.inverted() ? w.back().bar() : w.front());
  }
  return DirectionMap(std::move(images));
}

TransitionMatrix GraphMap::transition_matrix() const {
  TransitionMatrix m(rank_);
  for (int j = 0; j < rank_; ++j) {
    for (Direction d : images_[j]) {
      ++m.at(d.edge(), j);
    }
  }
  return m;
}

std::uint64_t GraphMap::total_length() const {
  std::uint64_t n = 0;
  for (const Word& w : images_) {
    n += w.size();
  }
  return n;
}

std::string GraphMap::to_string() const {
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += Direction::positive(i).to_string() + " -> " + images_[i].to_string();
  }
  return out;
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  if (outer.rank_ != inner.rank_) {
    throw RankError("composing graph maps of ranks " +
                    std::to_string(outer.rank_) + " and " +
                    std::to_string(inner.rank_));
  }
  GraphMap out;
  out.rank_ = outer.rank_;
  out.tightened_ = outer.tightened_ || inner.tightened_;
  for (const Word& w : inner.images_) {
    std::vector<Direction> raw = outer.substitute(w);
    Word reduced = Word::reduce(raw);
    if (reduced.size() != raw.size()) {
      out.tightened_ = true;
    }
    if (reduced.empty()) {
      throw Error("composite collapses an edge to the trivial path");
    }
    out.images_.push_back(std::move(reduced));
  }
  return out;
}

GraphMap power(const GraphMap& g, int exponent) {
  GraphMap out = GraphMap::identity(g.rank());
  for (int i = 0; i < exponent; ++i) {
    out = compose(g, out);
  }
  return out;
}

Word apply(const GraphMap& g, const Word& w) { return g.apply(w); }
DirectionMap direction_map(const GraphMap& g) { return g.direction_map(); }
TransitionMatrix transition_matrix(const GraphMap& g) {
  return g.transition_matrix();
}

long long abelian_determinant(const GraphMap& g) {
  int n = g.rank();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    for (Direction d : g.images()[j]) {
      a[d.edge()][j] += d.inverted() ? -1 : 1;
    }
  }
  // Bareiss fraction-free elimination.
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) {
        return 0;
      }
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace iwg
