// Copyright 2026 The eprkit Authors
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

#pragma once

// Observed correlation tables for protocol runs.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "eprkit/assemblage.hpp"

namespace eprkit {

/// Setting label of a party whose input is the designated one (⋆).
inline constexpr int kStar = -1;

/// (outcomes | settings). kStar may appear among the settings.
struct SliceKey {
  std::vector<int> outcomes;
  std::vector<int> settings;
  auto operator<=>(const SliceKey&) const = default;
};

/// Text form "a,b,c|x,y,*,w".
std::string slice_key_to_string(const SliceKey& key);
SliceKey slice_key_from_string(const std::string& text);

/// Conditional marginal p(b, c | z, w) keyed (b, c, z, w).
using Marginal = std::map<Key, double>;

struct CorrelationTable {
  Scenario scenario = Scenario::bwi;
  int qubits = 1;
  bool diagnostic = false;  // true for runs that may report but never certify
  std::map<SliceKey, double> slice;
  std::map<std::string, Marginal> selftest;  // "C" and, in the channel scenario, "D"

  double at(const SliceKey& key) const;
  double slice_mass() const;
};

}  // namespace eprkit
