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

#include "iwg/nielsen.hpp"

#include <algorithm>
#include <cctype>

#include "iwg/error.hpp"

namespace iwg {

NielsenGenerator::NielsenGenerator(Direction x, Direction y) : x_(x), y_(y) {
  if (x.edge() == y.edge()) {
    throw InvalidLetter("Nielsen generator needs two distinct edges, got x=" +
                        x.to_string() + " y=" + y.to_string());
  }
}

NielsenGenerator NielsenGenerator::parse(std::string_view text, int rank) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) {
      s += c;
    }
  }
  std::size_t arrow = s.find("->");
  if (arrow == std::string::npos) {
    arrow = s.find("=>");
  }
  if (arrow == std::string::npos) {
    throw InvalidLetter("generator \"" + std::string(text) +
                        "\" lacks an arrow");
  }
  auto lhs = parse_letters(std::string_view(s).substr(0, arrow), rank);
  auto rhs = parse_letters(std::string_view(s).substr(arrow + 2), rank);
  if (lhs.size() != 1 || rhs.size() != 2) {
    throw InvalidLetter("generator \"" + std::string(text) +
                        "\" is not of the form k -> y k or k -> k y");
  }
  Direction k = lhs.front();
  if (rhs[1] == k && rhs[0].edge() != k.edge()) {
    return prepend(k, rhs[0]);
  }
  if (rhs[0] == k && rhs[1].edge() != k.edge()) {
    return append(k, rhs[1]);
  }
  throw InvalidLetter("generator \"" + std::string(text) +
                      "\" is not of the form k -> y k or k -> k y");
}

Word NielsenGenerator::image(Direction d) const {
  if (d == x_) {
    return Word::reduce(std::vector<Direction>{y_, x_});
  }
  if (d == x_.bar()) {
    return Word::reduce(std::vector<Direction>{x_.bar(), y_.bar()});
  }
  return Word::of(d);
}

GraphMap NielsenGenerator::to_map(int rank) const {
  if (max_edge() >= rank) {
    throw RankError("generator " + to_string() + " is not in rank " +
                    std::to_string(rank));
  }
  std::vector<Word> images;
  for (int i = 0; i < rank; ++i) {
    images.push_back(image(Direction::positive(i)));
  }
  return GraphMap(rank, std::move(images));
}

DirectionMap NielsenGenerator::direction_map(int rank) const {
  if (max_edge() >= rank) {
    throw RankError("generator " + to_string() + " is not in rank " +
                    std::to_string(rank));
  }
  std::vector<Direction> images;
  for (Direction d : all_directions(rank)) {
    images.push_back((*this)(d));
  }
  return DirectionMap(std::move(images));
}

std::string NielsenGenerator::to_string() const {
  Direction e = Direction::positive(x_.edge());
  std::string out = "[" + e.to_string() + "->";
  if (x_.inverted()) {
    out += e.to_string() + y_.bar().to_string();
  } else {
    out += y_.to_string() + e.to_string();
  }
  return out + "]";
}

GraphMap generator_to_map(const NielsenGenerator& n, int rank) {
  return n.to_map(rank);
}

Turn illegal_turn_of_generator(const NielsenGenerator& n) {
  return n.illegal_turn();
}

bool is_admissible_pair(const NielsenGenerator& first,
                        const NielsenGenerator& second) {
  Direction ybar = first.y().bar();
  return (second.x() == first.x() && second.y() != ybar) ||
         (second.y() == first.x() && second.x() != ybar);
}

Decomposition::Decomposition(int rank, std::vector<NielsenGenerator> steps,
                             int origin)
    : rank_(rank), steps_(std::move(steps)), origin_(origin) {
  if (rank < 2 || rank > kMaxRank) {
    throw RankError("decomposition rank " + std::to_string(rank) +
                    " out of range");
  }
  for (const NielsenGenerator& n : steps_) {
    if (n.max_edge() >= rank) {
      throw RankError("generator " + n.to_string() + " is not in rank " +
                      std::to_string(rank));
    }
  }
  int n = static_cast<int>(steps_.size());
  if (origin < 0 || (n > 0 && origin >= n) || (n == 0 && origin != 0)) {
    throw RankError("origin " + std::to_string(origin) + " out of range");
  }
}

std::vector<NielsenGenerator> Decomposition::effective_steps() const {
  std::vector<NielsenGenerator> out(steps_.begin() + origin_, steps_.end());
  out.insert(out.end(), steps_.begin(), steps_.begin() + origin_);
  return out;
}

Decomposition Decomposition::normalized() const {
  return Decomposition(rank_, effective_steps());
}

Decomposition Decomposition::rotated(int k) const {
  auto s = effective_steps();
  if (s.empty()) {
    return *this;
  }
  int n = static_cast<int>(s.size());
  k = ((k % n) + n) % n;
  std::rotate(s.begin(), s.begin() + k, s.end());
  return Decomposition(rank_, std::move(s));
}

Decomposition Decomposition::power(int m) const {
  auto s = effective_steps();
  std::vector<NielsenGenerator> out;
  for (int i = 0; i < m; ++i) {
    out.insert(out.end(), s.begin(), s.end());
  }
  return Decomposition(rank_, std::move(out));
}

Decomposition Decomposition::extended(int rank) const {
  if (rank < rank_) {
    throw RankError("cannot extend rank " + std::to_string(rank_) + " to " +
                    std::to_string(rank));
  }
  return Decomposition(rank, steps_, origin_);
}

Decomposition Decomposition::relabeled(const PairPermutation& p) const {
  if (p.source_rank() != rank_) {
    throw RankError("relabeling of rank " + std::to_string(p.source_rank()) +
                    " applied to rank " + std::to_string(rank_));
  }
  std::vector<NielsenGenerator> out;
  for (const NielsenGenerator& n : steps_) {
    out.push_back(n.relabeled(p));
  }
  return Decomposition(p.target_rank(), std::move(out), origin_);
}

Decomposition Decomposition::then(const Decomposition& after) const {
  if (after.rank_ != rank_) {
    throw RankError("concatenating decompositions of different ranks");
  }
  auto s = effective_steps();
  auto t = after.effective_steps();
  s.insert(s.end(), t.begin(), t.end());
  return Decomposition(rank_, std::move(s));
}

Decomposition Decomposition::prefix(std::size_t k) const {
  auto s = effective_steps();
  s.erase(s.begin() + std::min(k, s.size()), s.end());
  return Decomposition(rank_, std::move(s));
}

GraphMap Decomposition::compose_words() const {
  GraphMap g = GraphMap::identity(rank_);
  for (const NielsenGenerator& n : effective_steps()) {
    g = compose(n.to_map(rank_), g);
  }
  return g;
}

std::string Decomposition::to_string() const {
  std::string out;
  for (const NielsenGenerator& n : effective_steps()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += n.to_string();
  }
  return out;
}

bool is_admissible(const Decomposition& d) {
  auto s = d.effective_steps();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!is_admissible_pair(s[i], s[i + 1])) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_admissible(const Decomposition& d) {
  if (d.empty()) {
    return false;
  }
  auto s = d.effective_steps();
  return is_admissible(d) && is_admissible_pair(s.back(), s.front());
}

}  // namespace iwg
