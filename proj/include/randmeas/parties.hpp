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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randmeas {

// Hard ceiling on the number of parties any state or subset may address.
inline constexpr int kMaxParties = 10;

// A set of parties, labelled 1..n (party 1 is the most significant tensor
// factor). Stored as a bitmask; iteration is always in ascending label order.
class Parties {
 public:
  Parties() = default;

  static Parties full(int n);
  static Parties from_labels(const std::vector<int>& labels);
  // Parses "1,2,4". Throws std::invalid_argument on malformed input.
  static Parties parse(std::string_view text);
  static Parties from_mask(std::uint32_t mask) { return Parties(mask); }

  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int label) const;
  bool is_subset_of(Parties other) const { return (mask_ & ~other.mask_) == 0; }
  int max_label() const;

  std::vector<int> labels() const;
  // Position of `label` inside labels(), or -1.
  int position_of(int label) const;

  Parties operator|(Parties o) const { return Parties(mask_ | o.mask_); }
  Parties operator&(Parties o) const { return Parties(mask_ & o.mask_); }
  Parties without(Parties o) const { return Parties(mask_ & ~o.mask_); }

  std::string to_string() const;

  friend bool operator==(Parties, Parties) = default;
  // Orders by size first, then lexicographically by labels.
  friend std::strong_ordering operator<=>(Parties a, Parties b);

 private:
  explicit Parties(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// All non-empty subsets of `set`, ordered by size then labels.
std::vector<Parties> nonempty_subsets(Parties set);
// All subsets A with 0 < |A| < |set|.
std::vector<Parties> proper_nonempty_subsets(Parties set);

}  // namespace randmeas
