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

#include "iwg/direction.hpp"

#include <algorithm>
#include <cctype>

#include "iwg/error.hpp"

namespace iwg {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw RankError("rank " + std::to_string(rank) + " outside 1.." +
                    std::to_string(kMaxRank));
  }
}

}  // namespace

std::string Direction::to_string() const {
  std::string out(1, static_cast<char>('a' + edge()));
  if (inverted()) {
    out += '-';
  }
  return out;
}

Direction Direction::parse(std::string_view text, int rank) {
  auto letters = parse_letters(text, rank);
  if (letters.size() != 1) {
    throw InvalidLetter("expected a single direction, got \"" +
                        std::string(text) + "\"");
  }
  return letters.front();
}

std::vector<Direction> all_directions(int rank) {
  std::vector<Direction> out;
  out.reserve(2 * rank);
  for (int code = 0; code < 2 * rank; ++code) {
    out.push_back(Direction::from_code(code));
  }
  return out;
}

std::string Turn::to_string() const {
  return "{" + first_.to_string() + "," + second_.to_string() + "}";
}

std::string to_string(const TurnSet& turns) {
  std::string out = "{";
  bool first = true;
  for (const Turn& t : turns) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += t.to_string();
  }
  return out + "}";
}

std::vector<Direction> parse_letters(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Direction> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    int edge;
    bool inverted;
    if (c >= 'a' && c <= 'z') {
      edge = c - 'a';
      inverted = false;
    } else if (c >= 'A' && c <= 'Z') {
      edge = c - 'A';
      inverted = true;
    } else {
      throw InvalidLetter("unexpected character '" + std::string(1, c) +
                          "' in \"" + std::string(text) + "\"");
    }
    if (i + 1 < text.size() && text[i + 1] == '-') {
      if (inverted) {
        throw InvalidLetter("doubly inverted letter in \"" + std::string(text) +
                            "\"");
      }
      inverted = true;
      ++i;
    }
    if (edge >= rank) {
      throw InvalidLetter("letter '" + std::string(1, c) +
                          "' out of range for rank " + std::to_string(rank));
    }
    out.push_back(inverted ? Direction::negative(edge)
                           : Direction::positive(edge));
  }
  return out;
}

Word Word::reduce(std::span<const Direction> letters) {
  std::vector<Direction> stack;
  stack.reserve(letters.size());
  for (Direction d : letters) {
    if (!stack.empty() && stack.back() == d.bar()) {
      stack.pop_back();
    } else {
      stack.push_back(d);
    }
  }
  return Word(std::move(stack));
}

Word Word::parse(std::string_view text, int rank) {
  auto letters = parse_letters(text, rank);
  return reduce(letters);
}

Word Word::inverse() const {
  std::vector<Direction> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->bar());
  }
  return Word(std::move(out));
}

Word Word::suffix(std::size_t from) const {
  from = std::min(from, letters_.size());
  return Word(std::vector<Direction>(letters_.begin() + from, letters_.end()));
}

Word Word::prefix(std::size_t count) const {
  count = std::min(count, letters_.size());
  return Word(std::vector<Direction>(letters_.begin(), letters_.begin() + count));
}

bool Word::starts_with(const Word& other) const {
  return other.size() <= size() &&
         std::equal(other.begin(), other.end(), letters_.begin());
}

int Word::max_edge() const {
  int out = -1;
  for (Direction d : letters_) {
    out = std::max(out, d.edge());
  }
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (Direction d : letters_) {
    out += d.to_string();
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Direction> joined = lhs.letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word::reduce(joined);
}

Word reduce(std::span<const Direction> letters) { return Word::reduce(letters); }

std::size_t common_prefix(const Word& lhs, const Word& rhs) {
  std::size_t n = std::min(lhs.size(), rhs.size());
  std::size_t i = 0;
  while (i < n && lhs[i] == rhs[i]) {
    ++i;
  }
  return i;
}

TurnSet taken_turns(std::span<const Direction> letters) {
  TurnSet out;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    out.emplace(letters[i].bar(), letters[i + 1]);
  }
  return out;
}

TurnSet taken_turns(const Word& w) { return taken_turns(w.letters()); }

PairPermutation::PairPermutation(int target_rank,
                                 std::vector<Direction> positive_images)
    : target_rank_(target_rank), images_(std::move(positive_images)) {
  if (source_rank() > target_rank_) {
    throw RankError("relabeling cannot shrink the rank");
  }
  std::vector<bool> used(target_rank_, false);
  for (Direction d : images_) {
    if (d.edge() >= target_rank_) {
      throw RankError("relabeling image " + d.to_string() + " out of range");
    }
    if (used[d.edge()]) {
      throw RankError("relabeling sends two edges to the pair of " +
                      d.to_string());
    }
    used[d.edge()] = true;
  }
}

PairPermutation PairPermutation::identity(int rank) {
  return inclusion(rank, rank);
}

PairPermutation PairPermutation::inclusion(int from, int to) {
  std::vector<Direction> images;
  for (int i = 0; i < from; ++i) {
    images.push_back(Direction::positive(i));
  }
  return PairPermutation(to, std::move(images));
}

Word PairPermutation::operator()(const Word& w) const {
  std::vector<Direction> out;
  out.reserve(w.size());
  for (Direction d : w) {
    out.push_back((*this)(d));
  }
  return Word::reduce(out);
}

PairPermutation PairPermutation::inverse() const {
  if (!is_permutation()) {
    throw RankError("only a permutation of edge pairs can be inverted");
  }
  std::vector<Direction> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Direction e = images_[i];
    Direction back = Direction::positive(static_cast<int>(i));
    images[e.edge()] = e.inverted() ? back.bar() : back;
  }
  return PairPermutation(target_rank_, std::move(images));
}

std::string PairPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += Direction::positive(static_cast<int>(i)).to_string() + "->" +
           images_[i].to_string();
  }
  return out;
}

PairPermutation compose(const PairPermutation& outer,
                        const PairPermutation& inner) {
  if (inner.target_rank_ != outer.source_rank()) {
    throw RankError("relabelings do not compose");
  }
  std::vector<Direction> images;
  for (Direction d : inner.images_) {
    images.push_back(outer(d));
  }
  return PairPermutation(outer.target_rank_, std::move(images));
}

}  // namespace iwg
