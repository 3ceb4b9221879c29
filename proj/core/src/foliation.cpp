#include "liecurv/foliation.hpp"

#include <algorithm>

#include "liecurv/error.hpp"

namespace liecurv {

FoliationSplit make_split(MetricLieAlgebra alg, const std::vector<int>& vertical) {
  auto [vert, horiz] = split_indices(alg.dim(), vertical);
  return {std::move(alg), std::move(vert), std::move(horiz)};
}

namespace {

std::vector<Scalar> masked(const FoliationSplit& split, std::vector<Scalar> v, bool keep_vertical) {
  std::vector<char> is_vert(split.alg.dim(), 0);
  for (int i : split.vertical) is_vert[i] = 1;
  for (int i = 0; i < split.alg.dim(); ++i)
    if ((is_vert[i] != 0) != keep_vertical) v[i] = Scalar(0);
  return v;
}

}  // namespace

std::vector<Scalar> vertical_projection(const FoliationSplit& split, std::vector<Scalar> v) {
  return masked(split, std::move(v), true);
}

std::vector<Scalar> horizontal_projection(const FoliationSplit& split, std::vector<Scalar> v) {
  return masked(split, std::move(v), false);
}

SubalgebraResult subalgebra_check(const FoliationSplit& split) {
  SubalgebraResult res;
  for (std::size_t a = 0; a < split.vertical.size(); ++a)
    for (std::size_t b = a + 1; b < split.vertical.size(); ++b)
      for (int k : split.horizontal) {
        const Scalar& comp = split.alg.c(k, split.vertical[a], split.vertical[b]);
        if (!comp.is_zero()) {
          res.closed = false;
          res.u = split.vertical[a];
          res.v = split.vertical[b];
          res.k = k;
          res.component = comp;
          return res;
        }
      }
  return res;
}

namespace {

void require_subalgebra(const FoliationSplit& split) {
  SubalgebraResult sub = subalgebra_check(split);
  if (!sub.closed)
    fail(errc::not_subalgebra,
         "vertical span is not bracket-closed: [" + split.alg.label(sub.u) + "," +
             split.alg.label(sub.v) + "] has " + split.alg.label(sub.k) + " component " +
             sub.component.str());
}

SecondFundamentalForm second_fundamental_form_from(const FoliationSplit& split,
                                                   const ConnectionTable& nab) {
  int m = split.vdim(), h = split.hdim();
  SecondFundamentalForm B;
  B.vertical = split.vertical;
  B.horizontal = split.horizontal;
  B.comp.assign(static_cast<std::size_t>(m) * m * h, Scalar());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < h; ++c)
        B.comp[static_cast<std::size_t>(a * m + b) * h + c] =
            nab.gamma(split.vertical[a], split.vertical[b], split.horizontal[c]);
  return B;
}

}  // namespace

bool SecondFundamentalForm::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> SecondFundamentalForm::trace() const {
  std::vector<Scalar> t(horizontal.size());
  for (std::size_t a = 0; a < vertical.size(); ++a)
    for (std::size_t c = 0; c < horizontal.size(); ++c)
      t[c] += at(static_cast<int>(a), static_cast<int>(a), static_cast<int>(c));
  return t;
}

SecondFundamentalForm second_fundamental_form(const FoliationSplit& split) {
  require_subalgebra(split);
  return second_fundamental_form_from(split, koszul_connection(split.alg));
}

Classification classify(const FoliationSplit& split) {
  Classification cls;
  cls.subalgebra_witness = subalgebra_check(split);
  cls.subalgebra = cls.subalgebra_witness.closed;
  ConnectionTable nab = koszul_connection(split.alg);

  if (cls.subalgebra) {
    SecondFundamentalForm B = second_fundamental_form_from(split, nab);
    cls.totally_geodesic = B.is_zero();
    auto tr = B.trace();
    cls.minimal = std::all_of(tr.begin(), tr.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  // Conformality: (1/2)(L_V g)(X_c, X_d) = (1/2)(<nabla_{X_c} V, X_d> +
  // <nabla_{X_d} V, X_c>) must equal nu(V) delta_{cd} on the horizontal basis.
  cls.conformal = true;
  Scalar half(Rational(1, 2));
  int h = split.hdim();
  for (int a = 0; a < split.vdim(); ++a) {
    int va = split.vertical[a];
    Scalar nu_a;
    if (h > 0)
      nu_a = nab.gamma(split.horizontal[0], va, split.horizontal[0]);
    for (int c = 0; c < h && cls.conformal; ++c)
      for (int d = c; d < h; ++d) {
        int xc = split.horizontal[c], xd = split.horizontal[d];
        Scalar val = half * (nab.gamma(xc, va, xd) + nab.gamma(xd, va, xc));
        Scalar expected = (c == d) ? nu_a : Scalar(0);
        if (val != expected) {
          cls.conformal = false;
          cls.conformal_witness = ConformalWitness{va, xc, xd, val, expected};
          break;
        }
      }
    if (!cls.conformal) break;
    cls.nu.push_back(nu_a);
  }
  if (!cls.conformal) cls.nu.clear();
  cls.riemannian = cls.conformal && std::all_of(cls.nu.begin(), cls.nu.end(),
                                                [](const Scalar& s) { return s.is_zero(); });
  return cls;
}

ONeillA oneill_a(const FoliationSplit& split) {
  require_subalgebra(split);
  Classification cls = classify(split);
  if (!cls.conformal)
    fail(errc::conformality_required, "O'Neill A with dilation gradient needs a conformal split");

  ConnectionTable nab = koszul_connection(split.alg);
  int m = split.vdim(), h = split.hdim();
  ONeillA A;
  A.vertical = split.vertical;
  A.horizontal = split.horizontal;
  A.comp.assign(static_cast<std::size_t>(h) * h * m, Scalar());
  for (int c = 0; c < h; ++c)
    for (int d = 0; d < h; ++d)
      for (int a = 0; a < m; ++a)
        A.comp[static_cast<std::size_t>(c * h + d) * m + a] =
            nab.gamma(split.horizontal[c], split.horizontal[d], split.vertical[a]);
  A.grad.assign(m, Scalar());
  if (h > 0)
    for (int a = 0; a < m; ++a) A.grad[a] = A.at(0, 0, a);

  // Cross-validation: A_X Y = (1/2) V([X,Y]) + <X,Y> V(grad ln lambda).
  Scalar half(Rational(1, 2));
  for (int c = 0; c < h; ++c)
    for (int d = 0; d < h; ++d)
      for (int a = 0; a < m; ++a) {
        Scalar expected = half * split.alg.c(split.vertical[a], split.horizontal[c],
                                             split.horizontal[d]);
        if (c == d) expected += A.grad[a];
        if (A.at(c, d, a) != expected)
          fail(errc::internal_error, "conformal decomposition of A failed to verify");
      }
  return A;
}

RicciConditionResult ricci_condition_check(const FoliationSplit& split) {
  if (split.hdim() != 2)
    fail(errc::codimension_error, "Ricci condition needs a horizontal complement of size 2, got " +
                                      std::to_string(split.hdim()));
  ScalarMatrix ric = ricci(split.alg);
  RicciConditionResult res;
  res.X = split.horizontal[0];
  res.Y = split.horizontal[1];
  res.ric_xx = ric.at(res.X, res.X);
  res.ric_yy = ric.at(res.Y, res.Y);
  res.ric_xy = ric.at(res.X, res.Y);
  res.holds = res.ric_xx == res.ric_yy && res.ric_xy.is_zero();
  return res;
}

namespace {

std::vector<Scalar> basis_vector(int n, int i) {
  std::vector<Scalar> v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

ONeillIdentityReport oneill_identity_check(const FoliationSplit& split) {
  require_subalgebra(split);
  const MetricLieAlgebra& alg = split.alg;
  int n = alg.dim();
  ConnectionTable nab = koszul_connection(alg);
  RiemannTensor R = riemann(alg);
  Classification cls = classify(split);

  auto vproj = [&](std::vector<Scalar> v) { return vertical_projection(split, std::move(v)); };
  auto hproj = [&](std::vector<Scalar> v) { return horizontal_projection(split, std::move(v)); };
  // Tensor values with constant projections applied to the arguments.
  auto B = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    return hproj(nab.nabla(vproj(u), vproj(v)));
  };
  auto A = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    return vproj(nab.nabla(hproj(x), hproj(y)));
  };

  ONeillIdentityReport rep;

  // (ii): <R(U^V), W^X> = <(nabla_U B)_V W, X> - <(nabla_V B)_U W, X>.
  rep.identity_ii_holds = true;
  for (int u : split.vertical) {
    auto eu = basis_vector(n, u);
    for (int v : split.vertical) {
      auto ev = basis_vector(n, v);
      for (int w : split.vertical) {
        auto ew = basis_vector(n, w);
        // (nabla_U B)_V W = nabla_U (B_V W) - B_{nabla_U V} W - B_V (nabla_U W)
        auto d_u = nab.nabla(eu, B(ev, ew));
        auto t1 = B(nab.nabla(eu, ev), ew);
        auto t2 = B(ev, nab.nabla(eu, ew));
        auto d_v = nab.nabla(ev, B(eu, ew));
        auto t3 = B(nab.nabla(ev, eu), ew);
        auto t4 = B(eu, nab.nabla(ev, ew));
        for (int x : split.horizontal) {
          Scalar rhs = d_u[x] - t1[x] - t2[x] - (d_v[x] - t3[x] - t4[x]);
          Scalar lhs = R.at(u, v, w, x);
          if (lhs != rhs) {
            rep.identity_ii_holds = false;
            rep.ii_witness = ONeillIdentityReport::WitnessII{u, v, w, x, lhs, rhs};
            goto done_ii;
          }
        }
      }
    }
  }
done_ii:

  // (iii) needs the conformal dilation gradient and vanishing B.
  rep.identity_iii_applicable =
      cls.conformal && cls.totally_geodesic && split.hdim() == 2;
  if (rep.identity_iii_applicable) {
    ONeillA oa = oneill_a(split);
    rep.identity_iii_holds = true;
    for (std::size_t ui = 0; ui < split.vertical.size() && rep.identity_iii_holds; ++ui) {
      int u = split.vertical[ui];
      auto eu = basis_vector(n, u);
      for (std::size_t vi = 0; vi < split.vertical.size() && rep.identity_iii_holds; ++vi) {
        int v = split.vertical[vi];
        auto ev = basis_vector(n, v);
        // V(ln lambda) = <V, V(grad ln lambda)> = -nu(V).
        const Scalar& v_ln_lambda = oa.grad[vi];
        for (int x : split.horizontal) {
          auto ex = basis_vector(n, x);
          // A*_X U = -H(nabla_X U).
          auto ax_u = hproj(nab.nabla(ex, eu));
          for (int y : split.horizontal) {
            auto ey = basis_vector(n, y);
            auto ay_v = hproj(nab.nabla(ey, ev));
            // (nabla_U A)_X Y = nabla_U (A_X Y) - A_{nabla_U X} Y - A_X (nabla_U Y)
            auto d_a = nab.nabla(eu, A(ex, ey));
            auto s1 = A(nab.nabla(eu, ex), ey);
            auto s2 = A(ex, nab.nabla(eu, ey));
            Scalar rhs = d_a[v] - s1[v] - s2[v];
            for (int c : split.horizontal) rhs += ax_u[c] * ay_v[c];  // <A*_X U, A*_Y V>
            auto axy = A(ex, ey);
            rhs -= Scalar(2) * v_ln_lambda * axy[u];
            Scalar lhs = R.at(u, x, y, v);
            if (lhs != rhs) {
              rep.identity_iii_holds = false;
              rep.iii_witness = ONeillIdentityReport::WitnessIII{u, x, y, v, lhs, rhs};
              break;
            }
          }
          if (!rep.identity_iii_holds) break;
        }
      }
    }
  }
  return rep;
}

std::vector<ScanEntry> coordinate_subalgebra_scan(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  if (n < 3) fail(errc::degenerate_dimension, "scan needs dimension >= 3");
  std::vector<ScanEntry> out;
  std::vector<int> subset(n - 2);
  for (int i = 0; i < n - 2; ++i) subset[i] = i;
  while (true) {
    FoliationSplit split = make_split(alg, subset);
    out.push_back({subset, classify(split)});
    // Next combination in lexicographic order; slot i maxes out at i + 2.
    int i = n - 3;
    while (i >= 0 && subset[i] == i + 2) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < n - 2; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

}  // namespace liecurv
