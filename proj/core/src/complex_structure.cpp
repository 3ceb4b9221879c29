#include "liecurv/complex_structure.hpp"

#include <utility>

#include "liecurv/error.hpp"

namespace liecurv {

AlmostComplexStructure make_complex_structure(ScalarMatrix J) {
  int n = J.rows();
  if (n != J.cols()) fail(errc::invalid_params, "complex structure must be square");
  if (n % 2 != 0)
    fail(errc::dimension_parity, "complex structure needs even dimension, got " +
                                     std::to_string(n));
  ScalarMatrix sq = J * J;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar expected = (i == j) ? Scalar(-1) : Scalar(0);
      if (sq.at(i, j) != expected)
        fail(errc::invalid_params, "J^2 != -I at entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
      if (J.at(i, j) != -J.at(j, i))
        fail(errc::invalid_params, "J is not skew-adjoint at entry (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
    }
  return {std::move(J)};
}

AdaptedResult adapted_check(const AlmostComplexStructure& J, const FoliationSplit& split) {
  if (split.hdim() != 2)
    fail(errc::codimension_error, "adaptedness is defined for a horizontal complement of size 2");
  int n = split.alg.dim();
  std::vector<char> is_vert(n, 0);
  for (int i : split.vertical) is_vert[i] = 1;
  AdaptedResult res;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (is_vert[i] == is_vert[k]) continue;
      if (!J.J.at(i, k).is_zero()) {
        res.adapted = false;
        res.from = k;
        res.to = i;
        res.component = J.J.at(i, k);
        return res;
      }
    }
  return res;
}

std::vector<Scalar> nijenhuis(const MetricLieAlgebra& alg, const AlmostComplexStructure& J,
                              const std::vector<Scalar>& Z, const std::vector<Scalar>& W) {
  auto JZ = J.apply(Z);
  auto JW = J.apply(W);
  auto out = alg.bracket(Z, W);
  auto t2 = J.apply(alg.bracket(JZ, W));
  auto t3 = J.apply(alg.bracket(Z, JW));
  auto t4 = alg.bracket(JZ, JW);
  for (int i = 0; i < alg.dim(); ++i) out[i] += t2[i] + t3[i] - t4[i];
  return out;
}

IntegrabilityResult integrability_check(const MetricLieAlgebra& alg,
                                        const AlmostComplexStructure& J) {
  int n = alg.dim();
  IntegrabilityResult res;
  std::vector<Scalar> ei(n), ej(n);
  for (int i = 0; i < n; ++i) {
    ei.assign(n, Scalar());
    ei[i] = Scalar(1);
    for (int j = i + 1; j < n; ++j) {
      ej.assign(n, Scalar());
      ej[j] = Scalar(1);
      auto nij = nijenhuis(alg, J, ei, ej);
      bool zero = true;
      for (const Scalar& s : nij)
        if (!s.is_zero()) {
          zero = false;
          break;
        }
      if (!zero) {
        res.integrable = false;
        res.i = i;
        res.j = j;
        res.defect = std::move(nij);
        return res;
      }
    }
  }
  return res;
}

namespace {

void require_adapted(const AlmostComplexStructure& J, const FoliationSplit& split) {
  AdaptedResult a = adapted_check(J, split);
  if (!a.adapted)
    fail(errc::adaptedness_required, "J does not preserve the split: J " +
                                         split.alg.label(a.from) + " has " +
                                         split.alg.label(a.to) + " component " +
                                         a.component.str());
}

std::vector<Scalar> basis_vector(int n, int i) {
  std::vector<Scalar> v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

CompatibilityResult compatibility_check(const AlmostComplexStructure& J,
                                        const FoliationSplit& split) {
  require_adapted(J, split);
  SubalgebraResult sub = subalgebra_check(split);
  if (!sub.closed)
    fail(errc::not_subalgebra, "compatibility with B needs a bracket-closed vertical span");
  ConnectionTable nab = koszul_connection(split.alg);
  int n = split.alg.dim();
  auto B = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    return horizontal_projection(split,
                                 nab.nabla(vertical_projection(split, u),
                                           vertical_projection(split, v)));
  };
  CompatibilityResult res;
  for (int u : split.vertical) {
    auto eu = basis_vector(n, u);
    auto jeu = J.apply(eu);
    for (int v : split.vertical) {
      auto ev = basis_vector(n, v);
      auto jev = J.apply(ev);
      auto lhs = J.apply(B(eu, ev));
      auto rhs1 = B(jeu, ev);
      auto rhs2 = B(eu, jev);
      for (int k : split.horizontal) {
        if (lhs[k] != rhs1[k]) {
          res.compatible = false;
          res.u = u;
          res.v = v;
          res.equality = 1;
          res.k = k;
          res.lhs = lhs[k];
          res.rhs = rhs1[k];
          return res;
        }
        if (lhs[k] != rhs2[k]) {
          res.compatible = false;
          res.u = u;
          res.v = v;
          res.equality = 2;
          res.k = k;
          res.lhs = lhs[k];
          res.rhs = rhs2[k];
          return res;
        }
      }
    }
  }
  return res;
}

SuperminimalResult superminimal_check(const AlmostComplexStructure& J,
                                      const FoliationSplit& split) {
  require_adapted(J, split);
  ConnectionTable nab = koszul_connection(split.alg);
  int n = split.alg.dim();
  SuperminimalResult res;
  for (int u : split.vertical) {
    auto eu = basis_vector(n, u);
    for (int k = 0; k < n; ++k) {
      auto ek = basis_vector(n, k);
      auto d1 = nab.nabla(eu, J.apply(ek));
      auto d2 = J.apply(nab.nabla(eu, ek));
      for (int c = 0; c < n; ++c) {
        Scalar diff = d1[c] - d2[c];
        if (!diff.is_zero()) {
          res.superminimal = false;
          res.u = u;
          res.k = k;
          res.comp = c;
          res.value = diff;
          return res;
        }
      }
    }
  }
  return res;
}

DualBLemmaReport dual_b_lemma_check(const AlmostComplexStructure& J,
                                    const FoliationSplit& split) {
  CompatibilityResult compat = compatibility_check(J, split);
  if (!compat.compatible)
    fail(errc::compatibility_required,
         "the dual-form identities assume J-compatibility of B, which fails at (" +
             split.alg.label(compat.u) + "," + split.alg.label(compat.v) + ")");
  ConnectionTable nab = koszul_connection(split.alg);
  int n = split.alg.dim();
  auto b_star = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& x) {
    auto v = vertical_projection(split,
                                 nab.nabla(vertical_projection(split, u),
                                           horizontal_projection(split, x)));
    for (Scalar& s : v) s = -s;
    return v;
  };
  DualBLemmaReport rep;
  for (int u : split.vertical) {
    auto eu = basis_vector(n, u);
    auto jeu = J.apply(eu);
    for (int x : split.horizontal) {
      auto ex = basis_vector(n, x);
      auto jex = J.apply(ex);
      auto lhs = b_star(eu, jex);              // B*_U JX
      auto rhs1 = b_star(jeu, ex);             // -(rhs1) should equal lhs
      auto rhs2 = J.apply(b_star(eu, ex));     // J B*_U X
      for (int k : split.vertical) {
        if (lhs[k] != -rhs1[k]) {
          rep.holds = false;
          rep.u = u;
          rep.x = x;
          rep.equality = 1;
          rep.k = k;
          rep.lhs = lhs[k];
          rep.rhs = -rhs1[k];
          return rep;
        }
        if (lhs[k] != rhs2[k]) {
          rep.holds = false;
          rep.u = u;
          rep.x = x;
          rep.equality = 2;
          rep.k = k;
          rep.lhs = lhs[k];
          rep.rhs = rhs2[k];
          return rep;
        }
      }
    }
  }
  return rep;
}

namespace {

/// Rational point on the unit circle from the tangent half-angle t:
/// c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
std::pair<Scalar, Scalar> rational_rotation(const Rational& t) {
  Rational t2 = t * t;
  Rational denom = t2 + 1;
  return {Scalar(Rational(1 - t2) / denom), Scalar(Rational(2 * t) / denom)};
}

}  // namespace

AlmostComplexStructure sample_adapted_structure(const FoliationSplit& split,
                                                std::mt19937_64& rng) {
  int n = split.alg.dim();
  int m = split.vdim();
  if (m % 2 != 0 || split.hdim() % 2 != 0)
    fail(errc::dimension_parity, "adapted structures need even vertical and horizontal factors");
  if (split.hdim() != 2)
    fail(errc::codimension_error, "adapted sampling targets a horizontal complement of size 2");

  // Fixed pairing on the vertical factor: J0 v_{2i} = v_{2i+1}.
  ScalarMatrix JV(m, m);
  for (int i = 0; i + 1 < m; i += 2) {
    JV.at(i + 1, i) = Scalar(1);
    JV.at(i, i + 1) = Scalar(-1);
  }
  // Conjugate by a product of rational Givens rotations.
  std::uniform_int_distribution<int> num_dist(-12, 12);
  std::uniform_int_distribution<int> den_dist(1, 12);
  std::uniform_int_distribution<int> idx_dist(0, m > 0 ? m - 1 : 0);
  int rounds = 2 * m;
  ScalarMatrix G = ScalarMatrix::identity(m);
  for (int r = 0; r < rounds && m >= 2; ++r) {
    int p = idx_dist(rng), q = idx_dist(rng);
    if (p == q) continue;
    Rational t(num_dist(rng), den_dist(rng));
    t.canonicalize();
    auto [c, s] = rational_rotation(t);
    // Right-multiply G by the rotation in the (p,q) plane.
    for (int i = 0; i < m; ++i) {
      Scalar gp = G.at(i, p), gq = G.at(i, q);
      G.at(i, p) = gp * c + gq * s;
      G.at(i, q) = gq * c - gp * s;
    }
  }
  ScalarMatrix JVrot = G * JV * G.transpose();

  ScalarMatrix J(n, n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) J.at(split.vertical[a], split.vertical[b]) = JVrot.at(a, b);
  // Horizontal factor: one of the two orientations, chosen by the stream.
  Scalar sign(rng() % 2 == 0 ? 1 : -1);
  J.at(split.horizontal[1], split.horizontal[0]) = sign;
  J.at(split.horizontal[0], split.horizontal[1]) = -sign;
  return make_complex_structure(std::move(J));
}

SamplingReport adapted_sampling_integrability(const FoliationSplit& split, int samples,
                                              std::uint64_t seed) {
  if (samples < 0) fail(errc::invalid_params, "sample count must be nonnegative");
  // Surface the parity/codimension errors before drawing anything.
  if (split.vdim() % 2 != 0 || split.hdim() % 2 != 0)
    fail(errc::dimension_parity, "adapted structures need even vertical and horizontal factors");
  if (split.hdim() != 2)
    fail(errc::codimension_error, "adapted sampling targets a horizontal complement of size 2");

  std::mt19937_64 rng(seed);
  const MetricLieAlgebra& alg = split.alg;
  int n = alg.dim();
  SamplingReport rep;
  rep.samples = samples;
  int x = split.horizontal.front();
  int u_last = split.vertical.empty() ? -1 : split.vertical.back();
  for (int s = 0; s < samples; ++s) {
    AlmostComplexStructure J = sample_adapted_structure(split, rng);
    IntegrabilityResult integ = integrability_check(alg, J);
    if (integ.integrable) {
      ++rep.integrable_count;
      if (!rep.first_integrable) rep.first_integrable = s;
    }
    if (u_last >= 0) {
      auto ex = basis_vector(n, x);
      auto eu = basis_vector(n, u_last);
      auto full = nijenhuis(alg, J, ex, eu);
      auto reduced = J.apply(alg.bracket(ex, J.apply(eu)));
      for (int k = 0; k < n; ++k)
        if (full[k] != reduced[k]) {
          rep.reduction_identity_all = false;
          break;
        }
    }
  }
  return rep;
}

}  // namespace liecurv
