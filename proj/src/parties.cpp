// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randmeas/parties.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace randmeas {

Parties Parties::full(int n) {
  if (n < 1 || n > kMaxParties) {
    throw std::invalid_argument("party count out of range: " + std::to_string(n));
  }
  return Parties((std::uint32_t{1} << n) - 1);
}

Parties Parties::from_labels(const std::vector<int>& labels) {
  std::uint32_t mask = 0;
  for (int label : labels) {
    if (label < 1 || label > kMaxParties) {
      throw std::invalid_argument("party label out of range: " + std::to_string(label));
    }
    const std::uint32_t bit = std::uint32_t{1} << (label - 1);
    if (mask & bit) {
      throw std::invalid_argument("duplicate party label: " + std::to_string(label));
    }
    mask |= bit;
  }
  return Parties(mask);
}

Parties Parties::parse(std::string_view text) {
  std::vector<int> labels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed party list: '" + std::string(text) + "'");
    }
    labels.push_back(value);
    pos = comma + 1;
  }
  return from_labels(labels);
}

int Parties::size() const { return std::popcount(mask_); }

bool Parties::contains(int label) const {
  return label >= 1 && label <= kMaxParties && (mask_ >> (label - 1)) & 1u;
}

int Parties::max_label() const { return 32 - std::countl_zero(mask_); }

std::vector<int> Parties::labels() const {
  std::vector<int> out;
  for (int label = 1; label <= kMaxParties; ++label) {
    if (contains(label)) out.push_back(label);
  }
  return out;
}

int Parties::position_of(int label) const {
  if (!contains(label)) return -1;
  const std::uint32_t below = mask_ & ((std::uint32_t{1} << (label - 1)) - 1);
  return std::popcount(below);
}

std::string Parties::to_string() const {
  std::string out;
  for (int label : labels()) {
    if (!out.empty()) out += ',';
    out += std::to_string(label);
  }
  return out;
}

std::strong_ordering operator<=>(Parties a, Parties b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.labels() <=> b.labels();
}

std::vector<Parties> nonempty_subsets(Parties set) {
  std::vector<Parties> out;
  // Standard submask enumeration.
  for (std::uint32_t sub = set.mask(); sub != 0; sub = (sub - 1) & set.mask()) {
    out.push_back(Parties::from_mask(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Parties> proper_nonempty_subsets(Parties set) {
  auto all = nonempty_subsets(set);
  std::erase(all, set);
  return all;
}

}  // namespace randmeas
