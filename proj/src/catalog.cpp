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

#include "eprkit/catalog.hpp"

#include <string>

namespace eprkit {

namespace {

const Alphabet kPtpA{0, 2};
const Alphabet kPtpX{1, 3};
const Alphabet kPtpY{0, 2};

// x = 1, 2, 3 selects X, Y, Z.
Matrix ptp_pauli(int x) {
  switch (x) {
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: throw InvalidArgumentError("PTP setting must be 1, 2 or 3");
  }
}

double sign(int exponent) { return exponent % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

BwIAssemblage ptp_assemblage(PtpConvention convention) {
  BwIAssemblage out(kPtpA, kPtpX, kPtpY, 2);
  for (int a : kPtpA.labels())
    for (int x : kPtpX.labels())
      for (int y : kPtpY.labels()) {
        const int flip = convention == PtpConvention::product ? (x == 2 && y == 1 ? 1 : 0)
                                                               : (x == 2 ? 1 : 0) + (y == 1 ? 1 : 0);
        const Matrix m = (pauli_i() + sign(a + flip) * ptp_pauli(x)) / 4.0;
        out.set({a, x, y}, HermitianOperator(m));
      }
  return out;
}

EPRFunctional ptp_functional(bool normalized, double almost_quantum) {
  EPRFunctional f;
  f.scenario = Scenario::bwi;
  f.operators = IndexedOperators({kPtpA, kPtpX, kPtpY}, 2);
  for (int a : kPtpA.labels())
    for (int x : kPtpX.labels())
      for (int y : kPtpY.labels()) {
        Matrix m = (pauli_i() - sign(a) * ptp_pauli(x)) / 2.0;
        if (y == 1) m.transposeInPlace();
        if (normalized) m -= (almost_quantum / 6.0) * pauli_i();
        f.operators.set({a, x, y}, HermitianOperator(m));
      }
  f.bounds.classical = normalized ? PtpConstants::classical - almost_quantum : PtpConstants::classical;
  f.bounds.no_signalling = normalized ? PtpConstants::no_signalling - almost_quantum : PtpConstants::no_signalling;
  f.bounds.almost_quantum = normalized ? 0.0 : almost_quantum;
  f.bounds.quantum_lower = normalized ? 0.0 : almost_quantum;
  f.bounds.quantum_upper = f.bounds.classical;
  return f;
}

EPRFunctional ptp_two_qubit_functional(double almost_quantum) {
  const EPRFunctional one = ptp_functional(true, almost_quantum);
  const HermitianOperator id = HermitianOperator::identity(2);
  EPRFunctional f;
  f.scenario = Scenario::bwi;
  f.operators = IndexedOperators(one.operators.alphabets(), 4);
  for (const auto& [key, op] : one.operators.elements()) f.operators.set(key, tensor(op, id) + tensor(id, op));
  f.bounds.quantum_lower = 0.0;
  return f;
}

EPRFunctional chsh_mdi_functional() {
  EPRFunctional f;
  f.scenario = Scenario::mdi;
  f.operators = IndexedOperators({kPtpA, Alphabet{0, 2}, kPtpX}, 2);
  const double share = std::sqrt(2.0) / 2.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x : kPtpX.labels()) {
        HermitianOperator g = HermitianOperator::zero(2);
        if (x != 3) {
          for (int y = 0; y < 2; ++y) {
            const double w = share - sign(a + b + (x - 1) * y);
            g += (2.0 * w) * pauli_projector(y, 1);
          }
        }
        f.operators.set({a, b, x}, g);
      }
  f.bounds.quantum_lower = 0.0;
  f.bounds.classical = 2.0 * std::sqrt(2.0) - 2.0;
  return f;
}

BellCoefficients ptp_bell_coefficients(double almost_quantum) {
  BellCoefficients xi;
  xi.scenario = Scenario::bwi;
  xi.qubits = 1;
  for (int a : kPtpA.labels())
    for (int x : kPtpX.labels())
      for (int y : kPtpY.labels()) {
        const int target_c = (a + 1 + (x == 2 ? y : 0)) % 2;
        const int target_w = x % 3 + 1;
        for (int c = 0; c < 2; ++c)
          for (int w = 1; w <= 3; ++w) {
            const double v = (c == target_c && w == target_w ? 1.0 : 0.0) - (w == 1 ? almost_quantum / 6.0 : 0.0);
            xi.coefficients[{a, x, y, c, w}] = v;
          }
      }
  return xi;
}

HermitianOperator resource_state(int c, int w) {
  if (c != 0 && c != 1) throw InvalidArgumentError("resource outcome must be 0 or 1");
  const double s = sign(c);
  switch (w) {
    case 1: return HermitianOperator(Matrix((pauli_i() + s * pauli_z()) / 4.0));
    case 2: return HermitianOperator(Matrix((pauli_i() + s * pauli_x()) / 4.0));
    case 3: return HermitianOperator(Matrix((pauli_i() - s * pauli_y()) / 4.0));
    default: throw InvalidArgumentError("resource setting must be 1, 2 or 3");
  }
}

HermitianOperator resource_effect(int c, int w) { return pauli_projector(c, w); }

HermitianOperator selftest_observable(int z) {
  static const int kSigns[4][3] = {{+1, +1, -1}, {+1, -1, +1}, {-1, +1, +1}, {-1, -1, -1}};  // (Z, X, Y)
  if (z < 1 || z > 4) throw InvalidArgumentError("self-test setting must be 1..4");
  const int* s = kSigns[z - 1];
  const Matrix m = (s[0] * pauli_z() + s[1] * pauli_x() + s[2] * pauli_y()) / std::sqrt(3.0);
  return HermitianOperator::hermitian_part(m);
}

SelfTestStrategy canonical_selftest_strategy() {
  SelfTestStrategy st;
  st.states = StandardAssemblage(Alphabet{0, 2}, Alphabet{1, 3}, 2);
  for (int c = 0; c < 2; ++c)
    for (int w = 1; w <= 3; ++w) st.states.set({c, w}, resource_state(c, w));
  for (int z = 1; z <= 4; ++z) st.observables[z - 1] = selftest_observable(z);
  return st;
}

Marginal canonical_selftest_marginal(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgumentError("mixing parameter r must lie in [0, 1]");
  Marginal p;
  const auto id = HermitianOperator::identity(2);
  for (int z = 1; z <= 4; ++z) {
    const HermitianOperator obs = selftest_observable(z);
    for (int b = 0; b < 2; ++b) {
      const HermitianOperator proj = 0.5 * (id + sign(b) * obs);
      for (int w = 1; w <= 3; ++w)
        for (int c = 0; c < 2; ++c) {
          const HermitianOperator s = resource_state(c, w);
          p[{b, c, z, w}] = r * trace_product(proj, s) + (1.0 - r) * trace_product(proj.transpose(), s.transpose());
        }
    }
  }
  return p;
}

HermitianOperator mdi_ptp_effect(int b) {
  switch (b) {
    case 0: return HermitianOperator(Matrix((pauli_i() + pauli_y()) / 3.0));
    case 1: return HermitianOperator(Matrix(2.0 * pauli_i() / 3.0 - pauli_y() / 3.0));
    default: throw InvalidArgumentError("MDI example outcome must be 0 or 1");
  }
}

CorrelationTable mdi_ptp_probabilities(MdiPtpForm form) {
  CorrelationTable t;
  t.scenario = Scenario::mdi;
  t.qubits = 1;
  const HermitianOperator phi = phi_plus_projector(1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x : kPtpX.labels()) {
        const HermitianOperator m(Matrix((pauli_i() + sign(a) * ptp_pauli(x)) / 2.0));
        for (int y = 0; y < 2; ++y) {
          double p = 0.0;
          if (form == MdiPtpForm::transposed_measurement) {
            const HermitianOperator n = y == 1 ? mdi_ptp_effect(b).transpose() : mdi_ptp_effect(b);
            p = trace_product(tensor(m, n), phi);
          } else {
            const HermitianOperator state = y == 1 ? partial_transpose(phi, {2, 2}, 1) : phi;
            p = trace_product(tensor(m, mdi_ptp_effect(b)), state);
          }
          t.slice[SliceKey{{a, b}, {x, y}}] = p;
        }
      }
  return t;
}

MDIAssemblage mdi_ptp_assemblage() {
  const CorrelationTable p = mdi_ptp_probabilities();
  MDIAssemblage out(kPtpA, Alphabet{0, 2}, kPtpX, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x : kPtpX.labels()) {
        HermitianOperator j = HermitianOperator::zero(2);
        for (int y = 0; y < 2; ++y) j += (0.5 * p.at(SliceKey{{a, b}, {x, y}})) * pauli_projector(y, 1);
        out.set({a, b, x}, j);
      }
  return out;
}

ChannelAssemblage embed_bwi_in_channel(const BwIAssemblage& a) {
  if (a.dim() != 2 || a.y().size != 2) throw DimensionError("embedding needs a qubit assemblage with two Bob inputs");
  ChannelAssemblage out(a.a(), a.x(), 2, 2);
  for (int al : a.a().labels())
    for (int x : a.x().labels()) {
      HermitianOperator j = HermitianOperator::zero(4);
      for (int y : a.y().labels()) j += 0.5 * tensor(a.at({al, x, y}), pauli_projector(y - a.y().first, 1));
      out.set({al, x}, j);
    }
  return out;
}

EPRFunctional embed_bwi_functional(const EPRFunctional& f) {
  if (f.scenario != Scenario::bwi) throw ScenarioMismatchError("only BwI functionals can be embedded");
  const auto& al = f.operators.alphabets();
  if (f.operators.dim() != 2 || al[2].size != 2) throw DimensionError("embedding needs qubit operators and two Bob inputs");
  EPRFunctional out;
  out.scenario = Scenario::channel;
  out.operators = IndexedOperators({al[0], al[1]}, 4);
  for (int a : al[0].labels())
    for (int x : al[1].labels()) {
      HermitianOperator g = HermitianOperator::zero(4);
      for (int y : al[2].labels()) g += 2.0 * tensor(f.operators.at({a, x, y}), pauli_projector(y - al[2].first, 1));
      out.operators.set({a, x}, g);
    }
  out.bounds = f.bounds;
  return out;
}

std::pair<ChannelAssemblage, EPRFunctional> embedded_ptp_channel() {
  return {embed_bwi_in_channel(ptp_assemblage()), embed_bwi_functional(ptp_functional(true))};
}

}  // namespace eprkit
