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

#include "eprkit/realisation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eprkit {

Matrix MeasurementChannel::effect(int b) const {
  const int d = kraus.in_dim();
  Matrix e = Matrix::Zero(d, d);
  for (size_t k = 0; k < kraus.kraus_ops().size(); ++k)
    if (outcome_of[k] == b) e += kraus.kraus_ops()[k].adjoint() * kraus.kraus_ops()[k];
  return e;
}

const HermitianOperator& QuantumRealisation::povm(int x_label, int a_label) const {
  if (!x.contains(x_label) || !a.contains(a_label)) throw InvalidArgumentError("POVM label out of range");
  return povms.at(x_label - x.first).at(a_label - a.first);
}

HermitianOperator QuantumRealisation::steered(int a_label, int x_label) const {
  const Matrix lhs = kron(povm(x_label, a_label).matrix(), Matrix::Identity(bob_dim, bob_dim));
  return HermitianOperator::hermitian_part(partial_trace(Matrix(lhs * state.matrix()), {alice_dim, bob_dim}, 0));
}

void QuantumRealisation::check(double tolerance) const {
  if (state.dim() != alice_dim * bob_dim) throw InvalidRealisationError("state dimension does not match alice_dim * bob_dim");
  if (min_eigenvalue(state) < -tolerance || std::abs(state.trace() - 1.0) > tolerance) {
    throw InvalidRealisationError("shared state is not a density matrix");
  }
  if (static_cast<int>(povms.size()) != x.size) throw InvalidRealisationError("one POVM per setting required");
  for (const auto& family : povms) {
    if (static_cast<int>(family.size()) != a.size) throw InvalidRealisationError("POVM has wrong number of outcomes");
    HermitianOperator sum = HermitianOperator::zero(alice_dim);
    for (const auto& m : family) {
      if (m.dim() != alice_dim) throw InvalidRealisationError("POVM element dimension mismatch");
      if (min_eigenvalue(m) < -tolerance) throw InvalidRealisationError("POVM element is not positive");
      sum += m;
    }
    if (max_abs_diff(sum, HermitianOperator::identity(alice_dim)) > tolerance) {
      throw InvalidRealisationError("POVM elements do not sum to the identity");
    }
  }
  for (const auto& ch : bob_channels) {
    if (ch.in_dim() != bob_dim || ch.out_dim() != bob_dim) throw InvalidRealisationError("Bob channel dimension mismatch");
    if (!ch.is_trace_preserving(tolerance)) throw InvalidRealisationError("Bob channel is not trace preserving");
  }
  if (bob_measurement) {
    const auto& mc = *bob_measurement;
    if (mc.kraus.in_dim() != bob_dim * bob_in_dim) throw InvalidRealisationError("measurement channel input dimension mismatch");
    if (mc.outcome_of.size() != mc.kraus.kraus_ops().size()) throw InvalidRealisationError("every Kraus operator needs an outcome");
    if (!mc.kraus.is_trace_preserving(tolerance)) throw InvalidRealisationError("measurement channel is not trace preserving");
  }
  if (bob_process) {
    if (bob_process->in_dim() != bob_dim * bob_in_dim) throw InvalidRealisationError("process input dimension mismatch");
    if (!bob_process->is_trace_preserving(tolerance)) throw InvalidRealisationError("process is not trace preserving");
  }
}

BwIAssemblage realize_bwi(const QuantumRealisation& qr) {
  qr.check();
  if (static_cast<int>(qr.bob_channels.size()) != qr.y.size) {
    throw InvalidRealisationError("one Bob channel per input y required");
  }
  BwIAssemblage out(qr.a, qr.x, qr.y, qr.bob_dim);
  for (int x : qr.x.labels())
    for (int a : qr.a.labels()) {
      const HermitianOperator s = qr.steered(a, x);
      for (int y : qr.y.labels()) out.set({a, x, y}, qr.bob_channels[y - qr.y.first].apply(s));
    }
  return out;
}

MDIAssemblage realize_mdi(const QuantumRealisation& qr) {
  qr.check();
  if (!qr.bob_measurement) throw InvalidRealisationError("MDI realisation needs a measurement channel");
  const auto& mc = *qr.bob_measurement;
  if (mc.outcomes != qr.b.size) throw InvalidRealisationError("measurement outcome count differs from |B|");
  MDIAssemblage out(qr.a, qr.b, qr.x, qr.bob_in_dim);
  std::vector<Matrix> effects;
  for (int b = 0; b < mc.outcomes; ++b) effects.push_back(mc.effect(b));
  for (int x : qr.x.labels())
    for (int a : qr.a.labels()) {
      const Matrix s = qr.steered(a, x).matrix();
      for (int b = 0; b < mc.outcomes; ++b) {
        const Matrix& e = effects[b];
        auto action = [&](const Matrix& in) {
          Matrix scalar(1, 1);
          scalar(0, 0) = (e * kron(s, in)).trace();
          return scalar;
        };
        out.set({a, b + qr.b.first, x}, choi_from_action(qr.bob_in_dim, 1, action));
      }
    }
  return out;
}

ChannelAssemblage realize_channel(const QuantumRealisation& qr) {
  qr.check();
  if (!qr.bob_process) throw InvalidRealisationError("channel realisation needs a process map");
  const KrausMap& gamma = *qr.bob_process;
  ChannelAssemblage out(qr.a, qr.x, gamma.out_dim(), qr.bob_in_dim);
  for (int x : qr.x.labels())
    for (int a : qr.a.labels()) {
      const Matrix s = qr.steered(a, x).matrix();
      auto action = [&](const Matrix& in) { return gamma.apply(Matrix(kron(s, in))); };
      out.set({a, x}, choi_from_action(qr.bob_in_dim, gamma.out_dim(), action));
    }
  return out;
}

std::vector<HermitianOperator> random_projective_povm(Rng& rng, int dim, int outcomes) {
  const Matrix u = random_unitary(rng, dim);
  std::uniform_int_distribution<int> pick(0, outcomes - 1);
  std::vector<Matrix> elems(outcomes, Matrix::Zero(dim, dim));
  for (int k = 0; k < dim; ++k) elems[pick(rng)] += u.col(k) * u.col(k).adjoint();
  std::vector<HermitianOperator> out;
  for (const auto& e : elems) out.push_back(HermitianOperator::hermitian_part(e));
  return out;
}

namespace {

QuantumRealisation random_base(Rng& rng, const ScenarioAlphabets& al, int bob_dim) {
  QuantumRealisation qr;
  qr.a = al.a;
  qr.x = al.x;
  qr.alice_dim = al.a.size <= 2 ? 2 : 4;
  qr.bob_dim = bob_dim;
  if (qr.alice_dim * qr.bob_dim > kMaxOperatorDim) throw DimensionError("random instance exceeds the supported dimension");
  qr.state = random_state(rng, qr.alice_dim * qr.bob_dim);
  for (int i = 0; i < al.x.size; ++i) qr.povms.push_back(random_projective_povm(rng, qr.alice_dim, al.a.size));
  return qr;
}

}  // namespace

RandomInstance random_quantum(Scenario scenario, std::uint64_t seed, const ScenarioAlphabets& al, int qubits) {
  if (qubits < 1 || qubits > 2) throw InvalidArgumentError("qubit count must be 1 or 2");
  if (qubits != 1 && scenario != Scenario::bwi && scenario != Scenario::standard) {
    throw InvalidArgumentError("multi-qubit random instances are available for the BwI and standard scenarios only");
  }
  Rng rng(seed);
  const int bob_dim = 1 << qubits;
  QuantumRealisation qr = random_base(rng, al, bob_dim);
  switch (scenario) {
    case Scenario::standard: {
      qr.y = Alphabet{0, 1};
      qr.bob_channels = {KrausMap::identity(bob_dim)};
      const BwIAssemblage bwi = realize_bwi(qr);
      StandardAssemblage st(al.a, al.x, bob_dim);
      for (const auto& [key, op] : bwi.elements()) st.set({key[0], key[1]}, op);
      return {st, qr};
    }
    case Scenario::bwi: {
      qr.y = al.y;
      for (int i = 0; i < al.y.size; ++i) qr.bob_channels.push_back(random_channel(rng, bob_dim, bob_dim, 2));
      return {realize_bwi(qr), qr};
    }
    case Scenario::mdi: {
      qr.b = al.b;
      qr.bob_in_dim = 2;
      const int in = bob_dim * qr.bob_in_dim;
      const int env = std::max(2, (in + al.b.size - 1) / al.b.size);
      const Matrix v = random_isometry(rng, al.b.size * env, in);
      MeasurementChannel mc;
      mc.outcomes = al.b.size;
      std::vector<Matrix> ops;
      for (int b = 0; b < al.b.size; ++b)
        for (int k = 0; k < env; ++k) {
          ops.push_back(v.row(b * env + k));
          mc.outcome_of.push_back(b);
        }
      mc.kraus = KrausMap(in, 1, std::move(ops));
      qr.bob_measurement = mc;
      return {realize_mdi(qr), qr};
    }
    case Scenario::channel: {
      qr.bob_in_dim = 2;
      qr.bob_process = random_channel(rng, bob_dim * qr.bob_in_dim, 2, 2);
      return {realize_channel(qr), qr};
    }
  }
  throw InvalidArgumentError("unknown scenario");
}

QuantumRealisation transposed_realisation(const QuantumRealisation& qr) {
  QuantumRealisation out = qr;
  out.state = qr.state.transpose();
  for (auto& family : out.povms)
    for (auto& m : family) m = m.transpose();
  for (auto& ch : out.bob_channels) ch = transpose_dual(ch);
  return out;
}

}  // namespace eprkit
