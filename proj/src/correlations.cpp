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

#include "eprkit/correlations.hpp"

#include <sstream>

namespace eprkit {

namespace {

std::string join(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i] == kStar ? std::string("*") : std::to_string(values[i]);
  }
  return out;
}

std::vector<int> split(const std::string& text, bool allow_star) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part == "*") {
      if (!allow_star) throw InvalidArgumentError("'*' is only allowed among settings");
      out.push_back(kStar);
      continue;
    }
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw InvalidArgumentError("malformed slice key component '" + part + "'");
    }
    if (used != part.size() || v < 0) throw InvalidArgumentError("malformed slice key component '" + part + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string slice_key_to_string(const SliceKey& key) { return join(key.outcomes) + "|" + join(key.settings); }

SliceKey slice_key_from_string(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw InvalidArgumentError("slice key '" + text + "' needs exactly one '|'");
  }
  SliceKey key{split(text.substr(0, bar), false), split(text.substr(bar + 1), true)};
  if (key.outcomes.empty() || key.settings.empty()) throw InvalidArgumentError("empty slice key part in '" + text + "'");
  return key;
}

double CorrelationTable::at(const SliceKey& key) const {
  auto it = slice.find(key);
  if (it == slice.end()) throw MissingEntryError("missing probability " + slice_key_to_string(key));
  return it->second;
}

double CorrelationTable::slice_mass() const {
  double total = 0.0;
  for (const auto& [k, v] : slice) total += v;
  return total;
}

}  // namespace eprkit
