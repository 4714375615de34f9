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

// Directions, turns and reduced words on the rank-r rose.
//
// The rose has one vertex and r edges E_1, ..., E_r.  A direction is the germ
// of an oriented edge at the vertex, so there are 2r of them.  Directions are
// encoded as 2 * edge + (inverted ? 1 : 0), which makes the bar involution a
// single xor and gives the canonical order a < a- < b < b- < ...
//
// Text syntax: a lowercase letter is a positive edge; a trailing '-' or an
// uppercase letter is its inverse.  Canonical output always uses the trailing
// '-' form, e.g. "acb-ca".

#ifndef IWG_DIRECTION_HPP_
#define IWG_DIRECTION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iwg {

// Ranks are limited by the single-letter text syntax.
inline constexpr int kMaxRank = 26;

class Direction {
 public:
  constexpr Direction() = default;

  static constexpr Direction positive(int edge) { return Direction(2 * edge); }
  static constexpr Direction negative(int edge) {
    return Direction(2 * edge + 1);
  }
  static constexpr Direction from_code(int code) { return Direction(code); }

  constexpr int code() const { return code_; }
  constexpr int edge() const { return code_ / 2; }
  constexpr bool inverted() const { return (code_ & 1) != 0; }
  constexpr Direction bar() const { return Direction(code_ ^ 1); }

  constexpr auto operator<=>(const Direction&) const = default;

  // "a", "a-", "b", ...
  std::string to_string() const;

  // Parses a single direction; throws InvalidLetter.
  static Direction parse(std::string_view text, int rank);

 private:
  explicit constexpr Direction(int code) : code_(code) {}
  int code_ = 0;
};

// All 2r directions in canonical order.
std::vector<Direction> all_directions(int rank);

// An unordered pair of directions.  Stored sorted, so {a,b} == {b,a}.
class Turn {
 public:
  Turn(Direction a, Direction b)
      : first_(a < b ? a : b), second_(a < b ? b : a) {}

  Direction first() const { return first_; }
  Direction second() const { return second_; }
  bool degenerate() const { return first_ == second_; }
  bool contains(Direction d) const { return first_ == d || second_ == d; }
  // The endpoint that is not `d`; `d` must be an endpoint.
  Direction other(Direction d) const { return first_ == d ? second_ : first_; }

  auto operator<=>(const Turn&) const = default;

  // "{a-,b}"
  std::string to_string() const;

 private:
  Direction first_;
  Direction second_;
};

using TurnSet = std::set<Turn>;

std::string to_string(const TurnSet& turns);

// Splits text into letters without reducing.  Whitespace is ignored.
std::vector<Direction> parse_letters(std::string_view text, int rank);

// A freely reduced edge path.
class Word {
 public:
  Word() = default;

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Direction> letters);
  static Word parse(std::string_view text, int rank);
  static Word of(Direction d) { return Word(std::vector<Direction>{d}); }

  const std::vector<Direction>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Direction front() const { return letters_.front(); }
  Direction back() const { return letters_.back(); }
  Direction operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  // Letters [from, size()).
  Word suffix(std::size_t from) const;
  // Letters [0, count).
  Word prefix(std::size_t count) const;
  bool starts_with(const Word& other) const;
  // Highest edge index used, or -1 for the empty word.
  int max_edge() const;

  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

  friend Word operator*(const Word& lhs, const Word& rhs);

 private:
  explicit Word(std::vector<Direction> reduced) : letters_(std::move(reduced)) {}
  std::vector<Direction> letters_;
};

// Free reduction of a letter sequence.
Word reduce(std::span<const Direction> letters);

// Length of the longest common prefix.
std::size_t common_prefix(const Word& lhs, const Word& rhs);

// The k-1 turns {bar(e_i), e_{i+1}} of a path e_1 ... e_k.
TurnSet taken_turns(const Word& w);
TurnSet taken_turns(std::span<const Direction> letters);

// An injective relabeling of directions that commutes with bar, from the
// labels of one rank into the labels of a rank at least as large.  With equal
// ranks it is a permutation of edge pairs.
class PairPermutation {
 public:
  PairPermutation() = default;
  // `positive_images[i]` is the image of E_i; its bar is the image of the
  // inverse.  Throws RankError if two edges land on the same pair.
  PairPermutation(int target_rank, std::vector<Direction> positive_images);

  static PairPermutation identity(int rank);
  // The inclusion of rank `from` labels into rank `to`.
  static PairPermutation inclusion(int from, int to);

  int source_rank() const { return static_cast<int>(images_.size()); }
  int target_rank() const { return target_rank_; }
  bool is_permutation() const { return source_rank() == target_rank_; }

  Direction operator()(Direction d) const {
    Direction e = images_[d.edge()];
    return d.inverted() ? e.bar() : e;
  }
  Turn operator()(const Turn& t) const {
    return Turn((*this)(t.first()), (*this)(t.second()));
  }
  Word operator()(const Word& w) const;

  // Only for permutations.
  PairPermutation inverse() const;

  bool operator==(const PairPermutation&) const = default;

  // "a->c b->a c->b"
  std::string to_string() const;

  friend PairPermutation compose(const PairPermutation& outer,
                                 const PairPermutation& inner);

 private:
  int target_rank_ = 0;
  std::vector<Direction> images_;
};

PairPermutation compose(const PairPermutation& outer,
                        const PairPermutation& inner);

}  // namespace iwg

template <>
struct std::hash<iwg::Direction> {
  std::size_t operator()(const iwg::Direction& d) const noexcept {
    return std::hash<int>()(d.code());
  }
};

#endif  // IWG_DIRECTION_HPP_
