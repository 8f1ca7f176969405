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

// Assemblage containers for the four supported scenarios and their
// no-signalling validators.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "eprkit/linalg.hpp"

namespace eprkit {

enum class Scenario { standard, bwi, mdi, channel };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

inline constexpr double kValidationTolerance = 1e-9;

/// Contiguous integer label set {first, ..., first + size - 1}.
struct Alphabet {
  int first = 0;
  int size = 0;

  int last() const { return first + size - 1; }
  bool contains(int label) const { return label >= first && label < first + size; }
  std::vector<int> labels() const;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

using Key = std::vector<int>;

std::string key_to_string(const Key& key);
Key key_from_string(const std::string& text);

/// Every key of the Cartesian product of the alphabets, lexicographic order.
std::vector<Key> all_keys(const std::vector<Alphabet>& alphabets);

/// Family of operators of a common dimension indexed by tuples of labels.
class IndexedOperators {
 public:
  IndexedOperators() = default;
  IndexedOperators(std::vector<Alphabet> alphabets, int dim);

  const std::vector<Alphabet>& alphabets() const { return alphabets_; }
  int dim() const { return dim_; }

  void set(const Key& key, HermitianOperator op);
  bool has(const Key& key) const { return elements_.count(key) != 0; }
  const HermitianOperator& at(const Key& key) const;
  const std::map<Key, HermitianOperator>& elements() const { return elements_; }

  std::vector<Key> keys() const { return all_keys(alphabets_); }
  std::vector<Key> missing_keys() const;

 private:
  std::vector<Alphabet> alphabets_;
  int dim_ = 0;
  std::map<Key, HermitianOperator> elements_;
};

/// σ_{c|w}, keyed (c, w).
class StandardAssemblage : public IndexedOperators {
 public:
  static constexpr Scenario kScenario = Scenario::standard;
  StandardAssemblage() = default;
  StandardAssemblage(Alphabet c, Alphabet w, int dim) : IndexedOperators({c, w}, dim) {}
  const Alphabet& c() const { return alphabets()[0]; }
  const Alphabet& w() const { return alphabets()[1]; }
};

/// σ_{a|xy}, keyed (a, x, y).
class BwIAssemblage : public IndexedOperators {
 public:
  static constexpr Scenario kScenario = Scenario::bwi;
  BwIAssemblage() = default;
  BwIAssemblage(Alphabet a, Alphabet x, Alphabet y, int dim) : IndexedOperators({a, x, y}, dim) {}
  const Alphabet& a() const { return alphabets()[0]; }
  const Alphabet& x() const { return alphabets()[1]; }
  const Alphabet& y() const { return alphabets()[2]; }
};

/// Choi operators J(N_{ab|x}) of measurement channels with scalar output, keyed (a, b, x).
class MDIAssemblage : public IndexedOperators {
 public:
  static constexpr Scenario kScenario = Scenario::mdi;
  MDIAssemblage() = default;
  MDIAssemblage(Alphabet a, Alphabet b, Alphabet x, int in_dim) : IndexedOperators({a, b, x}, in_dim) {}
  const Alphabet& a() const { return alphabets()[0]; }
  const Alphabet& b() const { return alphabets()[1]; }
  const Alphabet& x() const { return alphabets()[2]; }
};

/// Choi operators J(I_{a|x}) on B_out ⊗ B_in, keyed (a, x).
class ChannelAssemblage : public IndexedOperators {
 public:
  static constexpr Scenario kScenario = Scenario::channel;
  ChannelAssemblage() = default;
  ChannelAssemblage(Alphabet a, Alphabet x, int out_dim, int in_dim)
      : IndexedOperators({a, x}, out_dim * in_dim), out_dim_(out_dim), in_dim_(in_dim) {}
  const Alphabet& a() const { return alphabets()[0]; }
  const Alphabet& x() const { return alphabets()[1]; }
  int out_dim() const { return out_dim_; }
  int in_dim() const { return in_dim_; }

 private:
  int out_dim_ = 0;
  int in_dim_ = 0;
};

using Assemblage = std::variant<StandardAssemblage, BwIAssemblage, MDIAssemblage, ChannelAssemblage>;

Scenario scenario_of(const Assemblage& a);

struct ConditionResult {
  std::string name;
  std::string description;
  double residual = 0.0;
  bool passed = true;
};

struct ValidationReport {
  Scenario scenario = Scenario::standard;
  double tolerance = kValidationTolerance;
  std::vector<std::string> structural_errors;
  std::vector<ConditionResult> conditions;

  bool structurally_sound() const { return structural_errors.empty(); }
  bool passed() const;
  double max_residual() const;
  const ConditionResult* find(const std::string& name) const;
};

// Condition names: positivity, normalization, marginal_y_independence (BwI),
// alice_marginal (MDI, channel) and no_signalling.
ValidationReport validate(const StandardAssemblage& a, double tolerance = kValidationTolerance);
ValidationReport validate(const BwIAssemblage& a, double tolerance = kValidationTolerance);
ValidationReport validate(const MDIAssemblage& a, double tolerance = kValidationTolerance);
ValidationReport validate(const ChannelAssemblage& a, double tolerance = kValidationTolerance);
ValidationReport validate(const Assemblage& a, double tolerance = kValidationTolerance);

/// Elementwise transpose. Applied twice it returns the input exactly.
template <class A>
A transpose_assemblage(const A& in) {
  A out = in;
  for (const auto& [key, op] : in.elements()) out.set(key, op.transpose());
  return out;
}

}  // namespace eprkit
