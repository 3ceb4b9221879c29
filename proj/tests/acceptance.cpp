// Acceptance gate: every release-blocking behaviour of the toolkit, one
// pass/fail line per criterion.  Each criterion is independent; a throw
// inside one marks only that criterion as failed.  Exit code 0 iff all pass.

#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "golden.hpp"
#include "liecurv/catalog.hpp"
#include "liecurv/complex_structure.hpp"
#include "liecurv/foliation.hpp"
#include "liecurv/lie_algebra.hpp"
#include "liecurv/matrix.hpp"
#include "liecurv/obstruction.hpp"
#include "liecurv/polynomial.hpp"
#include "liecurv/scalar.hpp"
#include "liecurv/wedge.hpp"
#include "support.hpp"

using namespace liecurv;
using namespace liecurv::test;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool report(int num, const std::string& title, const Criterion& c) {
  if (c.ok)
    std::cout << "[PASS] criterion " << num << ": " << title << "\n";
  else
    std::cout << "[FAIL] criterion " << num << ": " << title << " -- " << c.detail << "\n";
  return c.ok;
}

template <typename Fn>
bool run_criterion(int num, const std::string& title, Fn&& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  } catch (...) {
    c.require(false, "unexpected non-standard exception");
  }
  return report(num, title, c);
}

std::string fixture(const std::string& name) {
  return std::string(LIECURV_TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Shared body for the two golden-table criteria: the library operator must
// reproduce the stored matrix exactly and the CLI must print the stored bytes.
void check_golden(Criterion& c, const std::string& name, const ScalarMatrix& expected_Q,
                  const std::vector<std::pair<int, int>>& expected_pairs,
                  const std::string& fixture_file) {
  MetricLieAlgebra alg = catalog_build(name);
  CurvatureOperator op = curvature_operator(alg, catalog_wedge_basis(name, alg.dim()));
  c.require(op.basis.pairs() == expected_pairs, name + ": wedge ordering differs from the documented display order");
  c.require(op.Q == expected_Q, name + ": operator entries differ from the stored table");
  CliResult r = run_cli({"operator", name});
  c.require(r.code == 0, name + ": CLI operator command failed: " + r.err);
  std::string want = read_file(fixture(fixture_file));
  c.require(!want.empty(), name + ": stored CLI fixture missing or empty");
  c.require(r.out == want, name + ": CLI operator output is not byte-identical to the stored fixture");
}

void criterion_1(Criterion& c) {
  check_golden(c, "nikonorov5", golden_nikonorov5_Q(), nikonorov5_display_pairs(),
               "nikonorov5_operator.txt");
}

void criterion_2(Criterion& c) {
  check_golden(c, "nikonorov4", golden_nikonorov4_Q(), nikonorov4_display_pairs(),
               "nikonorov4_operator.txt");
}

void criterion_3(Criterion& c) {
  ObstructionReport rep = paired_eigenvalue_test(catalog_build("nikonorov5"));
  c.require(rep.einstein.einstein, "metric not recognized as Einstein");
  c.require(rep.einstein.constant == S(-1), "Einstein constant is not -1");
  Polynomial expected_gcd({frac(-4, 15), S(1)});
  c.require(rep.gcd == expected_gcd,
            "gcd(f, f') is " + rep.gcd.str() + ", expected x - 4/15");
  c.require(rep.gcd_degree == 1, "gcd degree is not 1");
  c.require(rep.required_degree == 3, "required degree is not n - 2 = 3");
  c.require(rep.verdict == ObstructionVerdict::obstructed, "verdict is not 'obstructed'");
}

void criterion_4(Criterion& c) {
  MetricLieAlgebra alg = catalog_build("nikonorov4");
  const std::vector<int> vertical = {2, 3, 4};

  Classification cls = classify(make_split(alg, vertical));
  c.require(cls.subalgebra, "vertical span is not bracket-closed");
  c.require(cls.conformal, "split does not classify as conformal");
  c.require(cls.totally_geodesic, "split does not classify as totally geodesic");

  CurvatureOperator op = curvature_operator(alg, catalog_wedge_basis("nikonorov4", alg.dim()));
  ThetaIndependenceResult theta = theta_independence_check(op, vertical);
  c.require(theta.holds, "theta independence fails");
  c.require(block_split(op, vertical).invariant(), "off-block residual is nonzero");

  WBlockReport w = w_block_report(op, vertical);
  c.require(w.hermitian.commutes, "mixed block does not commute with J");
  c.require(w.spectrum.size() == 3, "mixed-block spectrum does not consist of three values");
  const double expect[3] = {-3.0 / 66.0, 12.0 / 66.0, 16.0 / 66.0};
  for (std::size_t i = 0; i < w.spectrum.size() && i < 3; ++i) {
    c.require(w.spectrum[i].multiplicity == 2, "a mixed-block eigenvalue is not doubled");
    c.require(near(w.spectrum[i].value, expect[i], 1e-10),
              "a mixed-block eigenvalue is outside 1e-10 of its expected value");
  }

  ObstructionReport full = paired_eigenvalue_test(alg);
  c.require(full.verdict == ObstructionVerdict::passes, "full-operator verdict is not 'passes'");
  c.require(full.gcd_degree == 3, "full gcd degree is not 3");
  c.require(full.required_degree == 3, "required degree is not 3");
  // Cross-check the exact gcd degree against the numeric eigenvalue
  // multiplicities: deg gcd(f, f') = sum over roots of (multiplicity - 1).
  c.require(full.spectrum.size() == 7, "full spectrum does not have 7 distinct values");
  int deficiency = 0;
  for (const SpectrumEntry& e : full.spectrum) deficiency += e.multiplicity - 1;
  c.require(deficiency == full.gcd_degree,
            "gcd degree disagrees with numeric eigenvalue multiplicities");
  const double full_expect[7] = {-3.0 / 66.0,
                                 12.0 / 66.0,
                                 16.0 / 66.0,
                                 (73.0 - std::sqrt(1489.0)) / 132.0,
                                 18.0 / 66.0,
                                 24.0 / 66.0,
                                 (73.0 + std::sqrt(1489.0)) / 132.0};
  for (std::size_t i = 0; i < full.spectrum.size() && i < 7; ++i)
    c.require(near(full.spectrum[i].value, full_expect[i], 1e-10),
              "a full-spectrum eigenvalue is outside 1e-10 of its expected value");
}

void criterion_5(Criterion& c) {
  for (int n : {2, 3, 4, 5}) {
    CatalogParams p;
    p.n = n;
    MetricLieAlgebra alg = catalog_build("g1", p);
    ScalarMatrix ric = ricci(alg);
    c.require(ric.at(0, 0) - ric.at(1, 1) == frac(1 - n, 2),
              "g1 n=" + std::to_string(n) + ": Ric(W,W) - Ric(X1,X1) != (1-n)/2");
    std::vector<int> vertical;
    for (int i = 2; i <= n + 1; ++i) vertical.push_back(i);
    SecondFundamentalForm B = second_fundamental_form(make_split(alg, vertical));
    Scalar b = B.at(0, 1, 0);  // <B_{X2} X3, W>
    c.require(b * b == frac(1, 4),
              "g1 n=" + std::to_string(n) + ": |<B_{X2}X3, W>| != 1/2");
  }

  std::mt19937_64 rng(20260814u);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    bool force_zero_tail = trial % 2 == 0;
    std::vector<Scalar> alpha;
    Scalar sum, sumsq;
    for (int k = 0; k < n; ++k) {
      Scalar a = (force_zero_tail && k > 0) ? Scalar(0) : Scalar(random_rational(rng));
      alpha.push_back(a);
      sum += a;
      sumsq += a * a;
    }
    CatalogParams p;
    p.alpha = alpha;
    MetricLieAlgebra alg = catalog_build("g2", p);
    ScalarMatrix ric = ricci(alg);
    c.require(ric.at(0, 0) == -sumsq, "g2: Ric(W,W) != -sum(alpha^2)");
    for (int k = 1; k <= n; ++k)
      c.require(ric.at(k, k) == -(alpha[static_cast<std::size_t>(k - 1)] * sum),
                "g2: Ric(Xk,Xk) != -alpha_k * sum(alpha)");
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        c.require(ric.at(i, j).is_zero(), "g2: off-diagonal Ricci entry is nonzero");

    std::vector<int> vertical;
    for (int i = 2; i <= n; ++i) vertical.push_back(i);
    SecondFundamentalForm B = second_fundamental_form(make_split(alg, vertical));
    bool tail_zero = true;
    for (int k = 1; k < n; ++k)
      if (!alpha[static_cast<std::size_t>(k)].is_zero()) tail_zero = false;
    c.require(B.is_zero() == tail_zero,
              "g2: B == 0 does not match alpha_2 = ... = alpha_n = 0");
    if (!c.ok) return;
  }
}

void criterion_6(Criterion& c) {
  MetricLieAlgebra alg = catalog_build("nikonorov5");
  std::vector<ScanEntry> scan = coordinate_subalgebra_scan(alg);
  bool found_tg = false, found_conf = false;
  for (const ScanEntry& e : scan) {
    if (e.subset == std::vector<int>{1, 3, 4}) {  // {X2, X4, A}
      found_tg = true;
      c.require(e.cls.subalgebra, "{X2,X4,A} not recognized as a subalgebra");
      c.require(e.cls.totally_geodesic, "{X2,X4,A} not recognized as totally geodesic");
      c.require(!e.cls.conformal, "{X2,X4,A} wrongly classified as conformal");
    }
    if (e.subset == std::vector<int>{1, 2, 3}) {  // {X2, X3, X4}
      found_conf = true;
      c.require(e.cls.subalgebra, "{X2,X3,X4} not recognized as a subalgebra");
      c.require(e.cls.conformal, "{X2,X3,X4} not recognized as conformal");
      c.require(!e.cls.minimal, "{X2,X3,X4} wrongly classified as minimal");
    }
  }
  c.require(found_tg && found_conf, "scan did not enumerate the documented subsets");
}

void criterion_7(Criterion& c) {
  CatalogParams p;
  p.n = 2;
  MetricLieAlgebra alg = catalog_build("g1", p);
  FoliationSplit split = make_split(alg, {2, 3});
  const std::uint64_t seed = 20260814u;
  SamplingReport rep = adapted_sampling_integrability(split, 100, seed);
  c.require(rep.samples == 100, "sample count mismatch");
  c.require(rep.integrable_count == 0, "an adapted structure sampled as integrable");
  c.require(!rep.first_integrable.has_value(), "first_integrable set despite zero count");
  c.require(rep.reduction_identity_all, "reduction identity failed inside the sampler");

  // Independent replay of the same deterministic stream: on every sample the
  // Nijenhuis tensor must reduce to J[W, J X3] exactly and be nonzero.
  std::mt19937_64 rng(seed);
  std::vector<Scalar> w(static_cast<std::size_t>(alg.dim()));
  w[0] = S(1);
  std::vector<Scalar> x3(static_cast<std::size_t>(alg.dim()));
  x3[3] = S(1);
  for (int s = 0; s < 100; ++s) {
    AlmostComplexStructure J = sample_adapted_structure(split, rng);
    std::vector<Scalar> full = nijenhuis(alg, J, w, x3);
    std::vector<Scalar> reduced = J.apply(alg.bracket(w, J.apply(x3)));
    c.require(vec_eq(full, reduced), "replayed sample violates N_J(W,X3) = J[W, J X3]");
    c.require(!vec_is_zero(full), "replayed sample has N_J(W,X3) = 0");
    if (!c.ok) return;
  }
}

void criterion_8(Criterion& c) {
  std::mt19937_64 rng(91u);

  // Connection and curvature identities on random Jacobi-closed algebras.
  for (int trial = 0; trial < 6 && c.ok; ++trial) {
    MetricLieAlgebra alg = (trial % 2 == 0) ? random_two_step(rng, 3, 2, trial >= 4)
                                            : random_almost_abelian(rng, 4, trial >= 3);
    int n = alg.dim();
    ConnectionTable nab = koszul_connection(alg);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          c.require(nab.gamma(i, j, k) - nab.gamma(j, i, k) == alg.c(k, i, j),
                    "connection is not torsion-free");
          c.require(nab.gamma(i, j, k) == -nab.gamma(i, k, j),
                    "connection is not metric-compatible");
        }

    RiemannTensor R = riemann(alg);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            c.require(R.at(i, j, k, l) == -R.at(j, i, k, l), "R is not antisymmetric in (i,j)");
            c.require(R.at(i, j, k, l) == -R.at(i, j, l, k), "R is not antisymmetric in (k,l)");
            c.require(R.at(i, j, k, l) == R.at(k, l, i, j), "R lacks pair symmetry");
            c.require((R.at(i, j, k, l) + R.at(j, k, i, l) + R.at(k, i, j, l)).is_zero(),
                      "first Bianchi identity fails");
          }
  }

  // Fiber second fundamental form is symmetric on random closed splits.
  for (int trial = 0; trial < 4 && c.ok; ++trial) {
    MetricLieAlgebra alg = random_two_step(rng, 3, 2, trial >= 2);
    SecondFundamentalForm B = second_fundamental_form(make_split(alg, {3, 4}));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int h = 0; h < 3; ++h)
          c.require(B.at(a, b, h) == B.at(b, a, h), "B is not symmetric");
  }

  // Horizontal tensor identities on the conformal totally geodesic split.
  MetricLieAlgebra nik4 = catalog_build("nikonorov4");
  const std::vector<int> vertical = {2, 3, 4};
  FoliationSplit split = make_split(nik4, vertical);
  ONeillA A = oneill_a(split);
  {
    int x = A.horizontal[0], y = A.horizontal[1];
    std::vector<Scalar> br = nik4.bracket(x, y);
    for (std::size_t a = 0; a < A.vertical.size(); ++a) {
      int ai = static_cast<int>(a);
      const Scalar& vcomp = br[static_cast<std::size_t>(A.vertical[a])];
      c.require(A.at(0, 1, ai) - A.at(1, 0, ai) == vcomp,
                "A_XY - A_YX != V([X,Y])");
      // <X,Y> = 0 for the orthonormal pair, so A_XY = (1/2) V([X,Y]).
      c.require(A.at(0, 1, ai) == frac(1, 2) * vcomp, "A_XY != (1/2) V([X,Y])");
      // <X,X> = 1, [X,X] = 0, so A_XX = V(grad ln lambda) for both directions.
      c.require(A.at(0, 0, ai) == A.grad[a], "A_XX != V(grad ln lambda)");
      c.require(A.at(1, 1, ai) == A.grad[a], "A_YY != V(grad ln lambda)");
    }
  }

  // |A*_X U|^2 is invariant under the rational rotation (3/5, 4/5) of the
  // horizontal frame on conformal codimension-2 splits.
  {
    struct RotCase {
      MetricLieAlgebra alg;
      std::vector<int> vertical;
    };
    std::vector<RotCase> cases;
    cases.push_back({nik4, vertical});
    cases.push_back({catalog_build("so3"), {0}});
    const Scalar cs = frac(3, 5), sn = frac(4, 5);
    for (const RotCase& rc : cases) {
      ConnectionTable nab = koszul_connection(rc.alg);
      auto [vert, horiz] = split_indices(rc.alg.dim(), rc.vertical);
      int x = horiz[0], y = horiz[1];
      for (int u : vert) {
        Scalar nx, ny, nrot;
        for (int cdir : horiz) {
          nx += nab.gamma(x, u, cdir) * nab.gamma(x, u, cdir);
          ny += nab.gamma(y, u, cdir) * nab.gamma(y, u, cdir);
          Scalar mixed = cs * nab.gamma(x, u, cdir) + sn * nab.gamma(y, u, cdir);
          nrot += mixed * mixed;
        }
        c.require(nx == ny, "|A*_X U|^2 != |A*_Y U|^2 on a conformal split");
        c.require(nx == nrot, "|A*_X U|^2 changes under a rational rotation");
      }
    }
  }

  ONeillIdentityReport ids = oneill_identity_check(split);
  c.require(ids.identity_ii_holds, "curvature identity (ii) fails");
  c.require(ids.identity_iii_applicable, "curvature identity (iii) not applicable");
  c.require(ids.identity_iii_holds, "curvature identity (iii) fails");

  // Cayley-Hamilton for both stored operators, exactly.
  for (const char* name : {"nikonorov5", "nikonorov4"}) {
    MetricLieAlgebra alg = catalog_build(name);
    CurvatureOperator op = curvature_operator(alg);
    Polynomial f = char_poly(op.Q);
    c.require(eval_matrix(f, op.Q).is_zero(),
              std::string(name) + ": operator does not annihilate its characteristic polynomial");
  }

  HermitianWResult h = hermitian_W_check(
      curvature_operator(nik4, catalog_wedge_basis("nikonorov4", nik4.dim())), vertical);
  c.require(h.commutes, "mixed block does not commute with J");
  c.require(h.det_RW == h.det_H_sq, "det(R|W) != det(H)^2");
  c.require(h.det_H_sq == h.det_H * h.det_H, "det(H)^2 field is inconsistent");
}

void criterion_9(Criterion& c) {
  struct Entry {
    std::string name;
    MetricLieAlgebra alg;
  };
  std::vector<Entry> entries;
  entries.push_back({"nikonorov5", catalog_build("nikonorov5")});
  entries.push_back({"nikonorov4", catalog_build("nikonorov4")});
  entries.push_back({"so3", catalog_build("so3")});
  entries.push_back({"heisenberg3", catalog_build("heisenberg3")});
  {
    CatalogParams p;
    p.n = 4;
    entries.push_back({"abelian(4)", catalog_build("abelian", p)});
  }
  {
    CatalogParams p;
    p.n = 2;
    entries.push_back({"g1(2)", catalog_build("g1", p)});
  }
  entries.push_back({"g2", catalog_build("g2")});

  int exercised = 0;
  for (const Entry& e : entries) {
    if (!einstein_check(e.alg).einstein || e.alg.dim() < 3) continue;
    CurvatureOperator op = curvature_operator(e.alg);
    for (const ScanEntry& s : coordinate_subalgebra_scan(e.alg)) {
      if (!(s.cls.subalgebra && s.cls.conformal && s.cls.totally_geodesic)) continue;
      ++exercised;
      FoliationSplit split = make_split(e.alg, s.subset);
      c.require(theta_independence_check(op, s.subset).holds,
                e.name + ": theta independence fails on an Einstein conformal TG split");
      RicciConditionResult rc = ricci_condition_check(split);
      c.require(rc.holds, e.name + ": Ricci curvature condition fails on an Einstein conformal TG split");
      ONeillIdentityReport ids = oneill_identity_check(split);
      c.require(ids.identity_ii_holds, e.name + ": identity (ii) fails on an Einstein conformal TG split");
      c.require(ids.identity_iii_applicable,
                e.name + ": identity (iii) not applicable on a conformal TG codim-2 split");
      c.require(ids.identity_iii_holds, e.name + ": identity (iii) fails on an Einstein conformal TG split");
      if (!c.ok) return;
    }
  }
  c.require(exercised >= 2, "fewer than two Einstein conformal TG splits were exercised");

  // Negative control: the conformal non-TG split must fail theta independence
  // with the documented exact witness.
  CurvatureOperator op5 = curvature_operator(catalog_build("nikonorov5"));
  ThetaIndependenceResult theta = theta_independence_check(op5, {1, 2, 3});
  c.require(!theta.holds, "theta independence unexpectedly holds on {X2,X3,X4}");
  c.require(theta.witness.identity == 1, "witness identity index is not 1");
  c.require(theta.witness.u == 1 && theta.witness.v == 1, "witness pair is not (X2, X2)");
  c.require(theta.witness.lhs == frac(17, 30), "witness lhs is not 17/30");
  c.require(theta.witness.rhs == frac(2, 15), "witness rhs is not 4/30");
}

}  // namespace

int main() {
  int failures = 0;
  failures += !run_criterion(1, "curvature operator reproduces the stored 10x10 table (nikonorov5)", criterion_1);
  failures += !run_criterion(2, "curvature operator reproduces the stored 10x10 table (nikonorov4)", criterion_2);
  failures += !run_criterion(3, "Einstein check and paired-eigenvalue obstruction (nikonorov5)", criterion_3);
  failures += !run_criterion(4, "invariant split pipeline with doubled mixed spectrum (nikonorov4)", criterion_4);
  failures += !run_criterion(5, "family Ricci and fiber-form formulas (g1, g2)", criterion_5);
  failures += !run_criterion(6, "coordinate subalgebra scan verdicts (nikonorov5)", criterion_6);
  failures += !run_criterion(7, "adapted complex structure sampling finds no integrable J (g1 n=2)", criterion_7);
  failures += !run_criterion(8, "exact tensor identity property suite", criterion_8);
  failures += !run_criterion(9, "conformal totally geodesic splits satisfy the curvature conditions", criterion_9);

  if (failures == 0)
    std::cout << "acceptance: all 9 criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
