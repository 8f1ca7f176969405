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

#include "eprkit/assemblage.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eprkit {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::standard: return "standard";
    case Scenario::bwi: return "bwi";
    case Scenario::mdi: return "mdi";
    case Scenario::channel: return "channel";
  }
  return "unknown";
}

Scenario scenario_from_string(const std::string& name) {
  if (name == "standard") return Scenario::standard;
  if (name == "bwi") return Scenario::bwi;
  if (name == "mdi") return Scenario::mdi;
  if (name == "channel") return Scenario::channel;
  throw InvalidArgumentError("unknown scenario '" + name + "'");
}

std::vector<int> Alphabet::labels() const {
  std::vector<int> out(size);
  for (int i = 0; i < size; ++i) out[i] = first + i;
  return out;
}

std::string key_to_string(const Key& key) {
  std::string out;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(key[i]);
  }
  return out;
}

Key key_from_string(const std::string& text) {
  Key key;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw InvalidArgumentError("malformed index key '" + text + "'");
    }
    if (used != part.size()) throw InvalidArgumentError("malformed index key '" + text + "'");
    key.push_back(value);
  }
  if (key.empty()) throw InvalidArgumentError("empty index key");
  return key;
}

std::vector<Key> all_keys(const std::vector<Alphabet>& alphabets) {
  std::vector<Key> out;
  for (const auto& a : alphabets)
    if (a.size <= 0) return out;
  Key current;
  for (const auto& a : alphabets) current.push_back(a.first);
  while (true) {
    out.push_back(current);
    int pos = static_cast<int>(alphabets.size()) - 1;
    while (pos >= 0) {
      if (++current[pos] <= alphabets[pos].last()) break;
      current[pos] = alphabets[pos].first;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

IndexedOperators::IndexedOperators(std::vector<Alphabet> alphabets, int dim)
    : alphabets_(std::move(alphabets)), dim_(dim) {
  for (const auto& a : alphabets_)
    if (a.size < 1) throw InvalidArgumentError("alphabets must be non-empty");
  if (dim < 1 || dim > kMaxOperatorDim || !is_power_of_two(dim)) {
    throw DimensionError("unsupported element dimension " + std::to_string(dim));
  }
}

void IndexedOperators::set(const Key& key, HermitianOperator op) {
  if (key.size() != alphabets_.size()) throw InvalidArgumentError("key " + key_to_string(key) + " has wrong arity");
  for (size_t i = 0; i < key.size(); ++i) {
    if (!alphabets_[i].contains(key[i])) {
      throw InvalidArgumentError("label " + std::to_string(key[i]) + " outside alphabet in key " + key_to_string(key));
    }
  }
  if (op.dim() != dim_) {
    throw DimensionError("element " + key_to_string(key) + " has dimension " + std::to_string(op.dim()) +
                         ", expected " + std::to_string(dim_));
  }
  elements_[key] = std::move(op);
}

const HermitianOperator& IndexedOperators::at(const Key& key) const {
  auto it = elements_.find(key);
  if (it == elements_.end()) throw MissingEntryError("missing element " + key_to_string(key));
  return it->second;
}

std::vector<Key> IndexedOperators::missing_keys() const {
  std::vector<Key> out;
  for (const auto& k : keys())
    if (!has(k)) out.push_back(k);
  return out;
}

Scenario scenario_of(const Assemblage& a) {
  return std::visit([](const auto& v) { return std::decay_t<decltype(v)>::kScenario; }, a);
}

bool ValidationReport::passed() const {
  if (!structural_errors.empty()) return false;
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

double ValidationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : conditions) m = std::max(m, c.residual);
  return m;
}

const ConditionResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

ValidationReport start_report(Scenario s, const IndexedOperators& ops, double tolerance) {
  ValidationReport r;
  r.scenario = s;
  r.tolerance = tolerance;
  for (const auto& k : ops.missing_keys()) r.structural_errors.push_back("missing element " + key_to_string(k));
  return r;
}

void add_condition(ValidationReport& r, std::string name, std::string description, double residual) {
  const bool ok = std::isfinite(residual) && residual <= r.tolerance;
  r.conditions.push_back({std::move(name), std::move(description), residual, ok});
}

double positivity_residual(const IndexedOperators& ops) {
  double worst = 0.0;
  for (const auto& [key, op] : ops.elements()) worst = std::max(worst, -min_eigenvalue(op));
  return worst;
}

// Sum over the label at position `summed` of the element family, keyed by the remaining labels.
std::map<Key, HermitianOperator> sum_over(const IndexedOperators& ops, size_t summed) {
  std::map<Key, HermitianOperator> out;
  for (const auto& [key, op] : ops.elements()) {
    Key rest;
    for (size_t i = 0; i < key.size(); ++i)
      if (i != summed) rest.push_back(key[i]);
    auto it = out.find(rest);
    if (it == out.end()) out.emplace(rest, op);
    else it->second += op;
  }
  return out;
}

// Largest deviation of a family from its member at the first label of position `varied`.
double spread_over(const std::map<Key, HermitianOperator>& family, size_t varied, int first_label) {
  double worst = 0.0;
  for (const auto& [key, op] : family) {
    Key ref = key;
    ref[varied] = first_label;
    worst = std::max(worst, max_abs_diff(op, family.at(ref)));
  }
  return worst;
}

}  // namespace

ValidationReport validate(const StandardAssemblage& a, double tolerance) {
  ValidationReport r = start_report(Scenario::standard, a, tolerance);
  if (!r.structurally_sound()) return r;
  add_condition(r, "positivity", "every element is positive semidefinite", positivity_residual(a));
  const auto sums = sum_over(a, 0);  // keyed (w)
  double norm = 0.0;
  for (const auto& [k, op] : sums) norm = std::max(norm, std::abs(op.trace() - 1.0));
  add_condition(r, "normalization", "sum over outcomes has unit trace", norm);
  add_condition(r, "no_signalling", "sum over outcomes is independent of the setting", spread_over(sums, 0, a.w().first));
  return r;
}

ValidationReport validate(const BwIAssemblage& a, double tolerance) {
  ValidationReport r = start_report(Scenario::bwi, a, tolerance);
  if (!r.structurally_sound()) return r;
  add_condition(r, "positivity", "every element is positive semidefinite", positivity_residual(a));

  const auto sums = sum_over(a, 0);  // keyed (x, y)
  double norm = 0.0;
  for (const auto& [k, op] : sums) norm = std::max(norm, std::abs(op.trace() - 1.0));
  add_condition(r, "normalization", "outcome traces sum to one for each (x, y)", norm);

  double ydep = 0.0;
  for (const auto& [key, op] : a.elements()) {
    const Key ref{key[0], key[1], a.y().first};
    ydep = std::max(ydep, std::abs(op.trace() - a.at(ref).trace()));
  }
  add_condition(r, "marginal_y_independence", "tr σ_{a|xy} does not depend on y", ydep);
  add_condition(r, "no_signalling", "Σ_a σ_{a|xy} does not depend on x", spread_over(sums, 0, a.x().first));
  return r;
}

ValidationReport validate(const MDIAssemblage& a, double tolerance) {
  ValidationReport r = start_report(Scenario::mdi, a, tolerance);
  if (!r.structurally_sound()) return r;
  add_condition(r, "positivity", "every Choi element is positive semidefinite", positivity_residual(a));

  const auto over_b = sum_over(a, 1);  // keyed (a, x)
  const auto ident = HermitianOperator::identity(a.dim());
  double marg = 0.0;
  std::map<int, double> mass;  // x -> Σ_a p(a|x)
  for (const auto& [k, op] : over_b) {
    const double p = op.trace();
    marg = std::max(marg, max_abs_diff(op, (p / a.dim()) * ident));
    mass[k[1]] += p;
  }
  add_condition(r, "alice_marginal", "Σ_b J(N_{ab|x}) is proportional to the identity", marg);
  double norm = 0.0;
  for (const auto& [x, m] : mass) norm = std::max(norm, std::abs(m - 1.0));
  add_condition(r, "normalization", "Alice's outcome probabilities sum to one", norm);

  const auto over_a = sum_over(a, 0);  // keyed (b, x)
  add_condition(r, "no_signalling", "Σ_a J(N_{ab|x}) does not depend on x", spread_over(over_a, 1, a.x().first));
  return r;
}

ValidationReport validate(const ChannelAssemblage& a, double tolerance) {
  ValidationReport r = start_report(Scenario::channel, a, tolerance);
  if (!r.structurally_sound()) return r;
  add_condition(r, "positivity", "every Choi element is positive semidefinite", positivity_residual(a));

  const auto ident = HermitianOperator::identity(a.in_dim());
  double marg = 0.0;
  std::map<int, double> mass;
  for (const auto& [key, op] : a.elements()) {
    const HermitianOperator reduced = partial_trace(op, {a.out_dim(), a.in_dim()}, 0);
    const double p = reduced.trace();
    marg = std::max(marg, max_abs_diff(reduced, (p / a.in_dim()) * ident));
    mass[key[1]] += p;
  }
  add_condition(r, "alice_marginal", "tr_out J(I_{a|x}) is proportional to the identity", marg);
  double norm = 0.0;
  for (const auto& [x, m] : mass) norm = std::max(norm, std::abs(m - 1.0));
  add_condition(r, "normalization", "Alice's outcome probabilities sum to one", norm);

  const auto over_a = sum_over(a, 0);  // keyed (x)
  add_condition(r, "no_signalling", "Σ_a J(I_{a|x}) does not depend on x", spread_over(over_a, 0, a.x().first));
  return r;
}

ValidationReport validate(const Assemblage& a, double tolerance) {
  return std::visit([&](const auto& v) { return validate(v, tolerance); }, a);
}

}  // namespace eprkit
