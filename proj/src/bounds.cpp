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

#include "eprkit/bounds.hpp"

#include <cmath>
#include <limits>

namespace eprkit {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::classical: return "classical";
    case BoundKind::ns_certificate: return "ns-certificate";
    case BoundKind::seesaw: return "seesaw";
  }
  return "unknown";
}

namespace {

struct BwIShape {
  Alphabet a, x, y;
  int dim;
};

BwIShape bwi_shape(const EPRFunctional& f, const char* what) {
  if (f.scenario != Scenario::bwi) {
    throw ScenarioMismatchError(std::string(what) + " is implemented for BwI functionals only");
  }
  const auto missing = f.operators.missing_keys();
  if (!missing.empty()) throw MissingEntryError("functional lacks operator " + key_to_string(missing.front()));
  const auto& al = f.operators.alphabets();
  return {al[0], al[1], al[2], f.operators.dim()};
}

}  // namespace

double strategy_value(const EPRFunctional& f, const DeterministicStrategy& s) {
  const BwIShape sh = bwi_shape(f, "strategy evaluation");
  if (static_cast<int>(s.response.size()) != sh.x.size) throw InvalidArgumentError("strategy must answer every x");
  double total = 0.0;
  for (int y : sh.y.labels()) {
    HermitianOperator g = HermitianOperator::zero(sh.dim);
    for (int x : sh.x.labels()) g += f.operators.at({s.response[x - sh.x.first], x, y});
    total += min_eigenvalue(g);
  }
  return total;
}

BoundReport classical_bound(const EPRFunctional& f) {
  const BwIShape sh = bwi_shape(f, "the classical bound");
  const double count = std::pow(static_cast<double>(sh.a.size), sh.x.size);
  if (count > kEnumerationGuard) {
    throw GuardExceededError("classical enumeration needs " + std::to_string(count) + " strategies, limit is " +
                             std::to_string(kEnumerationGuard));
  }
  const long long total = static_cast<long long>(count);
  BoundReport report;
  report.kind = BoundKind::classical;
  report.value = std::numeric_limits<double>::infinity();
  report.tight = true;
  report.strategies = total;
  DeterministicStrategy s;
  s.response.assign(sh.x.size, sh.a.first);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (int i = sh.x.size - 1; i >= 0; --i) {
      s.response[i] = sh.a.first + static_cast<int>(rest % sh.a.size);
      rest /= sh.a.size;
    }
    const double v = strategy_value(f, s);
    if (v < report.value) {
      report.value = v;
      report.strategy = s;
    }
  }
  report.note = "exact minimum over deterministic strategies with optimal Bob states";
  return report;
}

BoundReport ns_lower_bound(const EPRFunctional& f) {
  const BwIShape sh = bwi_shape(f, "the no-signalling certificate");
  BoundReport report;
  report.kind = BoundKind::ns_certificate;
  double total = 0.0;
  for (int x : sh.x.labels())
    for (int y : sh.y.labels()) {
      double best = std::numeric_limits<double>::infinity();
      for (int a : sh.a.labels()) best = std::min(best, min_eigenvalue(f.operators.at({a, x, y})));
      total += best;
    }
  report.value = total;
  report.tight = false;
  report.note = "lower bound over all no-signalling assemblages; tightness requires a witness";
  return report;
}

namespace {

struct SeesawState {
  HermitianOperator rho;
  std::vector<HermitianOperator> m0;  // M_{first|x}
};

double seesaw_value(const std::vector<std::array<HermitianOperator, 2>>& g, const SeesawState& st, int d) {
  Matrix h = Matrix::Zero(d * d, d * d);
  const Matrix id = Matrix::Identity(d, d);
  for (size_t x = 0; x < g.size(); ++x) {
    const Matrix m0 = st.m0[x].matrix();
    h += kron(m0, g[x][0].matrix()) + kron(Matrix(id - m0), g[x][1].matrix());
  }
  return (h * st.rho.matrix()).trace().real();
}

}  // namespace

BoundReport seesaw_quantum(const EPRFunctional& f, const SeesawOptions& opt) {
  const BwIShape sh = bwi_shape(f, "the seesaw search");
  if (sh.a.size != 2) throw InvalidArgumentError("the seesaw search needs a two-outcome Alice");
  if (opt.restarts < 1 || opt.max_iterations < 1) throw InvalidArgumentError("restarts and iterations must be positive");
  const int d = sh.dim;
  if (d * d > kMaxOperatorDim) throw DimensionError("seesaw state would exceed the supported dimension");

  // G_{ax} = Σ_y F_{axy}
  std::vector<std::array<HermitianOperator, 2>> g;
  for (int x : sh.x.labels()) {
    std::array<HermitianOperator, 2> pair{HermitianOperator::zero(d), HermitianOperator::zero(d)};
    for (int a = 0; a < 2; ++a)
      for (int y : sh.y.labels()) pair[a] += f.operators.at({sh.a.first + a, x, y});
    g.push_back(pair);
  }
  const Matrix id = Matrix::Identity(d, d);

  BoundReport report;
  report.kind = BoundKind::seesaw;
  report.value = std::numeric_limits<double>::infinity();
  report.restarts = opt.restarts;

  for (int r = 0; r < opt.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    Rng rng(seq);
    SeesawState st;
    for (int i = 0; i < sh.x.size; ++i) st.m0.push_back(random_projective_povm(rng, d, 2)[0]);

    std::vector<double> history;
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opt.max_iterations; ++it) {
      // state step
      Matrix h = Matrix::Zero(d * d, d * d);
      for (size_t x = 0; x < g.size(); ++x) {
        const Matrix m0 = st.m0[x].matrix();
        h += kron(m0, g[x][0].matrix()) + kron(Matrix(id - m0), g[x][1].matrix());
      }
      const auto eig = eig_hermitian(HermitianOperator::hermitian_part(h));
      const Vector v = eig.vectors.col(0);
      st.rho = HermitianOperator::hermitian_part(v * v.adjoint());

      // measurement step: K_{ax} = tr_B[(I ⊗ G_{ax}) ρ]
      for (size_t x = 0; x < g.size(); ++x) {
        const Matrix diff = (g[x][0] - g[x][1]).matrix();
        const Matrix k = partial_trace(Matrix(kron(id, diff) * st.rho.matrix()), {d, d}, 1);
        const auto ek = eig_hermitian(HermitianOperator::hermitian_part(k));
        Matrix p = Matrix::Zero(d, d);
        for (int j = 0; j < d; ++j)
          if (ek.values[j] <= 0.0) p += ek.vectors.col(j) * ek.vectors.col(j).adjoint();
        st.m0[x] = HermitianOperator::hermitian_part(p);
      }

      const double value = seesaw_value(g, st, d);
      history.push_back(value);
      const bool converged = std::isfinite(prev) && (prev - value) <= opt.relative_tolerance * std::max(1.0, std::abs(prev));
      prev = value;
      if (converged) break;
    }

    if (history.back() < report.value) {
      report.value = history.back();
      report.iterations = static_cast<int>(history.size());
      QuantumRealisation qr;
      qr.state = st.rho;
      qr.alice_dim = d;
      qr.bob_dim = d;
      qr.a = sh.a;
      qr.x = sh.x;
      qr.y = sh.y;
      for (const auto& m0 : st.m0) {
        qr.povms.push_back({m0, HermitianOperator::identity(d) - m0});
      }
      qr.bob_channels.assign(sh.y.size, KrausMap::identity(d));
      report.realisation = qr;
    }
    report.histories.push_back(std::move(history));
  }
  report.tight = false;
  report.note = "value attained by the embedded quantum realisation; Bob channels fixed to the identity";
  return report;
}

double correlator(const Marginal& p, int z, int w) {
  double total = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      auto it = p.find({b, c, z, w});
      if (it == p.end()) {
        throw MissingEntryError("self-test marginal lacks p(" + std::to_string(b) + "," + std::to_string(c) + "|" +
                                std::to_string(z) + "," + std::to_string(w) + ")");
      }
      total += ((b + c) % 2 == 0 ? 1.0 : -1.0) * it->second;
    }
  return total;
}

double selftest_value(const Marginal& p) {
  double total = 0.0;
  for (int w = 1; w <= 3; ++w)
    for (int z = 1; z <= 4; ++z) total += kSelfTestSigns[w - 1][z - 1] * correlator(p, z, w);
  return total;
}

}  // namespace eprkit
