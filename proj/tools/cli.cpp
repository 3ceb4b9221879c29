#include "cli.hpp"

#include <cstdio>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liecurv/catalog.hpp"
#include "liecurv/complex_structure.hpp"
#include "liecurv/error.hpp"
#include "liecurv/foliation.hpp"
#include "liecurv/io.hpp"
#include "liecurv/lie_algebra.hpp"
#include "liecurv/obstruction.hpp"
#include "liecurv/polynomial.hpp"
#include "liecurv/wedge.hpp"

namespace liecurv::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool float_mode = false;
  double tol = 1e-12;

  bool json_mode() const { return format == "json"; }
};

struct InputSpec {
  std::string input;
  std::optional<int> n;
  std::string alpha;

  bool is_catalog() const {
    for (const std::string& name : catalog_names())
      if (name == input) return true;
    return false;
  }
};

std::vector<Scalar> parse_alpha(const std::string& text) {
  std::vector<Scalar> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) fail(errc::invalid_params, "empty alpha list");
  return out;
}

MetricLieAlgebra resolve_input(const InputSpec& spec) {
  if (spec.input.empty()) fail(errc::invalid_params, "missing input");
  if (spec.is_catalog()) {
    CatalogParams params;
    params.n = spec.n;
    if (!spec.alpha.empty()) params.alpha = parse_alpha(spec.alpha);
    return catalog_build(spec.input, params);
  }
  if (spec.n || !spec.alpha.empty())
    fail(errc::invalid_params, "family parameters apply to catalog entries only");
  return load_algebra(spec.input);
}

// ---------------------------------------------------------------- rendering

std::string float_str(double v, const Options& opt) {
  if (opt.float_mode && v != 0.0 && v > -opt.tol && v < opt.tol) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string scalar_str(const Scalar& s, const Options& opt) {
  if (opt.float_mode) return float_str(s.to_double(), opt);
  return s.str();
}

json scalar_json(const Scalar& s, const Options& opt) {
  if (opt.float_mode) {
    double v = s.to_double();
    if (v != 0.0 && v > -opt.tol && v < opt.tol) v = 0.0;
    return v;
  }
  return s.str();
}

json matrix_json(const ScalarMatrix& M, const Options& opt) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(scalar_json(M.at(i, j), opt));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& out, const ScalarMatrix& M, const Options& opt) {
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      if (j) out << " ";
      out << scalar_str(M.at(i, j), opt);
    }
    out << "\n";
  }
}

/// "c1*L1 + c2*L2" style rendering of a component vector over labels.
std::string combo_str(const std::vector<Scalar>& v, const MetricLieAlgebra& alg,
                      const Options& opt) {
  std::string out;
  for (int i = 0; i < alg.dim(); ++i) {
    if (v[i].is_zero()) continue;
    std::string cs = scalar_str(v[i], opt);
    if (!out.empty()) {
      if (cs[0] == '-') {
        cs = scalar_str(-v[i], opt);
        out += " - ";
      } else {
        out += " + ";
      }
    }
    if (cs == "1") {
      out += alg.label(i);
    } else if (cs == "-1") {
      out += "-" + alg.label(i);
    } else {
      bool paren = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
      out += (paren ? "(" + cs + ")" : cs) + "*" + alg.label(i);
    }
  }
  return out.empty() ? "0" : out;
}

json vector_json(const std::vector<Scalar>& v, const Options& opt) {
  json arr = json::array();
  for (const Scalar& s : v) arr.push_back(scalar_json(s, opt));
  return arr;
}

json poly_json(const Polynomial& p, const Options& opt) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(scalar_json(p.coeff(i), opt));
  return arr;
}

json spectrum_json(const std::vector<SpectrumEntry>& spec, const Options& opt) {
  json arr = json::array();
  for (const SpectrumEntry& e : spec) {
    json item;
    item["value"] = e.value;
    item["multiplicity"] = e.multiplicity;
    arr.push_back(std::move(item));
  }
  (void)opt;
  return arr;
}

std::string label_list(const MetricLieAlgebra& alg, const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += alg.label(idx[i]);
  }
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- commands

int cmd_validate(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt) {
  ValidationReport rep = validate(alg);
  if (opt.json_mode()) {
    json j;
    j["command"] = "validate";
    j["dim"] = alg.dim();
    j["valid"] = rep.valid();
    json issues = json::array();
    for (const ValidationIssue& issue : rep.issues) {
      json item;
      item["kind"] = issue.kind == ValidationIssue::Kind::antisymmetry ? "antisymmetry" : "jacobi";
      item["description"] = issue.describe(alg);
      item["defect"] = scalar_json(issue.defect, opt);
      issues.push_back(std::move(item));
    }
    j["issues"] = std::move(issues);
    emit(out, j);
  } else {
    if (rep.valid()) {
      out << "valid: dimension " << alg.dim() << ", antisymmetry and Jacobi hold exactly\n";
    } else {
      out << "invalid: " << rep.issues.size() << " issue(s)\n";
      for (const ValidationIssue& issue : rep.issues) out << "  " << issue.describe(alg) << "\n";
    }
  }
  return rep.valid() ? 0 : 1;
}

int cmd_curvature(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt) {
  CurvatureData data = curvature_data(alg);
  int n = alg.dim();
  if (opt.json_mode()) {
    json j;
    j["command"] = "curvature";
    j["dim"] = n;
    json gam = json::array();
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k)
          if (!data.nabla.gamma(i, jj, k).is_zero()) {
            json item;
            item["i"] = i;
            item["j"] = jj;
            item["k"] = k;
            item["value"] = scalar_json(data.nabla.gamma(i, jj, k), opt);
            gam.push_back(std::move(item));
          }
    j["christoffel"] = std::move(gam);
    json riem = json::array();
    for (int i = 0; i < n; ++i)
      for (int jj = i + 1; jj < n; ++jj)
        for (int k = 0; k < n; ++k)
          for (int l = k + 1; l < n; ++l)
            if (!data.R.at(i, jj, k, l).is_zero()) {
              json item;
              item["i"] = i;
              item["j"] = jj;
              item["k"] = k;
              item["l"] = l;
              item["value"] = scalar_json(data.R.at(i, jj, k, l), opt);
              riem.push_back(std::move(item));
            }
    j["riemann"] = std::move(riem);
    j["ricci"] = matrix_json(data.ric, opt);
    emit(out, j);
  } else {
    out << "connection (nonzero covariant derivatives):\n";
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        auto v = data.nabla.nabla(i, jj);
        bool nonzero = false;
        for (const Scalar& s : v)
          if (!s.is_zero()) nonzero = true;
        if (nonzero)
          out << "  nabla[" << alg.label(i) << "," << alg.label(jj)
              << "] = " << combo_str(v, alg, opt) << "\n";
      }
    out << "curvature tensor (nonzero R[i,j,k,l] with i<j, k<l):\n";
    for (int i = 0; i < n; ++i)
      for (int jj = i + 1; jj < n; ++jj)
        for (int k = 0; k < n; ++k)
          for (int l = k + 1; l < n; ++l)
            if (!data.R.at(i, jj, k, l).is_zero())
              out << "  R[" << alg.label(i) << "," << alg.label(jj) << "," << alg.label(k) << ","
                  << alg.label(l) << "] = " << scalar_str(data.R.at(i, jj, k, l), opt) << "\n";
    out << "ricci:\n";
    print_matrix(out, data.ric, opt);
  }
  return 0;
}

int cmd_ricci(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt) {
  ScalarMatrix ric = ricci(alg);
  if (opt.json_mode()) {
    json j;
    j["command"] = "ricci";
    j["dim"] = alg.dim();
    j["ricci"] = matrix_json(ric, opt);
    emit(out, j);
  } else {
    print_matrix(out, ric, opt);
  }
  return 0;
}

json einstein_json(const EinsteinResult& res, const Options& opt) {
  json j;
  j["einstein"] = res.einstein;
  if (res.einstein) {
    j["constant"] = scalar_json(res.constant, opt);
  } else if (res.witness) {
    json w;
    w["i"] = res.witness->first;
    w["j"] = res.witness->second;
    w["value"] = scalar_json(res.witness_value, opt);
    w["expected"] = scalar_json(res.witness_expected, opt);
    j["witness"] = std::move(w);
  }
  return j;
}

int cmd_einstein(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt) {
  EinsteinResult res = einstein_check(alg);
  if (opt.json_mode()) {
    json j;
    j["command"] = "einstein";
    j.update(einstein_json(res, opt));
    emit(out, j);
  } else if (res.einstein) {
    out << "einstein: yes (Ric = " << scalar_str(res.constant, opt) << " * g)\n";
  } else {
    out << "einstein: no";
    if (res.witness)
      out << " (Ric[" << alg.label(res.witness->first) << "," << alg.label(res.witness->second)
          << "] = " << scalar_str(res.witness_value, opt)
          << ", expected " << scalar_str(res.witness_expected, opt) << ")";
    out << "\n";
  }
  return 0;
}

int cmd_operator(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt,
                 const WedgeBasis& basis) {
  CurvatureOperator op = curvature_operator(alg, basis);
  if (opt.json_mode()) {
    json j;
    j["command"] = "operator";
    j["dim"] = alg.dim();
    json pairs = json::array();
    json labels = json::array();
    for (const auto& [i, jj] : basis.pairs()) {
      pairs.push_back(json::array({i, jj}));
      labels.push_back(alg.label(i) + "^" + alg.label(jj));
    }
    j["basis"] = std::move(pairs);
    j["basis_labels"] = std::move(labels);
    j["matrix"] = matrix_json(op.Q, opt);
    emit(out, j);
  } else {
    out << "dim " << alg.dim() << "\n";
    out << "basis";
    for (const auto& [i, jj] : basis.pairs()) out << " (" << i << "," << jj << ")";
    out << "\n";
    out << "labels";
    for (const auto& [i, jj] : basis.pairs()) out << " " << alg.label(i) << "^" << alg.label(jj);
    out << "\n";
    print_matrix(out, op.Q, opt);
  }
  return 0;
}

json classification_json(const MetricLieAlgebra& alg, const Classification& cls,
                         const Options& opt) {
  json j;
  j["subalgebra"] = cls.subalgebra;
  if (!cls.subalgebra) {
    json w;
    w["u"] = alg.label(cls.subalgebra_witness.u);
    w["v"] = alg.label(cls.subalgebra_witness.v);
    w["leaks_into"] = alg.label(cls.subalgebra_witness.k);
    w["component"] = scalar_json(cls.subalgebra_witness.component, opt);
    j["witness"] = std::move(w);
    return j;
  }
  j["totally_geodesic"] = cls.totally_geodesic;
  j["minimal"] = cls.minimal;
  j["conformal"] = cls.conformal;
  j["riemannian"] = cls.riemannian;
  if (cls.conformal) {
    j["nu"] = vector_json(cls.nu, opt);
  } else if (cls.conformal_witness) {
    json w;
    w["vertical"] = alg.label(cls.conformal_witness->v);
    w["entry"] = json::array(
        {alg.label(cls.conformal_witness->c), alg.label(cls.conformal_witness->d)});
    w["value"] = scalar_json(cls.conformal_witness->value, opt);
    w["expected"] = scalar_json(cls.conformal_witness->expected, opt);
    j["conformal_witness"] = std::move(w);
  }
  return j;
}

int cmd_foliation(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt,
                  const std::vector<int>& vertical) {
  FoliationSplit split = make_split(alg, vertical);
  Classification cls = classify(split);
  bool codim2 = split.hdim() == 2;

  json j;
  j["command"] = "foliation";
  j["vertical"] = label_list(alg, split.vertical);
  j["horizontal"] = label_list(alg, split.horizontal);
  j.update(classification_json(alg, cls, opt));

  std::optional<RicciConditionResult> ricci_res;
  std::optional<ThetaIndependenceResult> theta_res;
  std::optional<BlockSplit> blocks;
  std::optional<ONeillIdentityReport> identities;
  if (codim2) {
    ricci_res = ricci_condition_check(split);
    CurvatureOperator op = curvature_operator(alg);
    theta_res = theta_independence_check(op, split.vertical);
    blocks = block_split(op, split.vertical);
  }
  if (cls.subalgebra) identities = oneill_identity_check(split);

  if (ricci_res) {
    json r;
    r["holds"] = ricci_res->holds;
    r["ric_xx"] = scalar_json(ricci_res->ric_xx, opt);
    r["ric_yy"] = scalar_json(ricci_res->ric_yy, opt);
    r["ric_xy"] = scalar_json(ricci_res->ric_xy, opt);
    j["ricci_condition"] = std::move(r);
  }
  if (theta_res) {
    json t;
    t["holds"] = theta_res->holds;
    if (!theta_res->holds) {
      json w;
      w["identity"] = theta_res->witness.identity;
      w["u"] = alg.label(theta_res->witness.u);
      w["v"] = alg.label(theta_res->witness.v);
      w["lhs"] = scalar_json(theta_res->witness.lhs, opt);
      w["rhs"] = scalar_json(theta_res->witness.rhs, opt);
      t["witness"] = std::move(w);
    }
    j["theta_independence"] = std::move(t);
  }
  if (blocks) j["block_residual_zero"] = blocks->invariant();
  if (identities) {
    json o;
    o["identity_ii"] = identities->identity_ii_holds;
    o["identity_iii_applicable"] = identities->identity_iii_applicable;
    if (identities->identity_iii_applicable) o["identity_iii"] = identities->identity_iii_holds;
    j["oneill_identities"] = std::move(o);
  }

  if (opt.json_mode()) {
    emit(out, j);
    return 0;
  }

  out << "vertical: " << j["vertical"].get<std::string>() << "\n";
  out << "horizontal: " << j["horizontal"].get<std::string>() << "\n";
  out << "subalgebra: " << yesno(cls.subalgebra) << "\n";
  if (!cls.subalgebra) {
    const auto& w = cls.subalgebra_witness;
    out << "  witness: [" << alg.label(w.u) << "," << alg.label(w.v) << "] has "
        << alg.label(w.k) << " component " << scalar_str(w.component, opt) << "\n";
  } else {
    out << "totally_geodesic: " << yesno(cls.totally_geodesic) << "\n";
    out << "minimal: " << yesno(cls.minimal) << "\n";
    out << "conformal: " << yesno(cls.conformal) << "\n";
    out << "riemannian: " << yesno(cls.riemannian) << "\n";
    if (cls.conformal) {
      for (std::size_t a = 0; a < cls.nu.size(); ++a)
        out << "  nu(" << alg.label(split.vertical[a]) << ") = " << scalar_str(cls.nu[a], opt)
            << "\n";
    } else if (cls.conformal_witness) {
      const auto& w = *cls.conformal_witness;
      out << "  witness: (1/2)(L_" << alg.label(w.v) << " g)[" << alg.label(w.c) << ","
          << alg.label(w.d) << "] = " << scalar_str(w.value, opt) << ", expected "
          << scalar_str(w.expected, opt) << "\n";
    }
  }
  if (ricci_res) {
    out << "ricci_condition: " << yesno(ricci_res->holds) << " (Ric[" << alg.label(ricci_res->X)
        << "," << alg.label(ricci_res->X) << "] = " << scalar_str(ricci_res->ric_xx, opt)
        << ", Ric[" << alg.label(ricci_res->Y) << "," << alg.label(ricci_res->Y)
        << "] = " << scalar_str(ricci_res->ric_yy, opt) << ", Ric[" << alg.label(ricci_res->X)
        << "," << alg.label(ricci_res->Y) << "] = " << scalar_str(ricci_res->ric_xy, opt)
        << ")\n";
  }
  if (theta_res) {
    out << "theta_independence: " << yesno(theta_res->holds);
    if (!theta_res->holds) {
      const auto& w = theta_res->witness;
      out << " (identity " << w.identity << " fails at U=" << alg.label(w.u)
          << ", V=" << alg.label(w.v) << ": " << scalar_str(w.lhs, opt) << " vs "
          << scalar_str(w.rhs, opt) << ")";
    }
    out << "\n";
  }
  if (blocks) out << "block_residual_zero: " << yesno(blocks->invariant()) << "\n";
  if (identities) {
    out << "oneill_identity_ii: " << yesno(identities->identity_ii_holds) << "\n";
    if (identities->identity_iii_applicable)
      out << "oneill_identity_iii: " << yesno(identities->identity_iii_holds) << "\n";
    else
      out << "oneill_identity_iii: not applicable (needs conformal + totally geodesic, "
             "codimension 2)\n";
  }
  return 0;
}

int cmd_scan(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt) {
  std::vector<ScanEntry> entries = coordinate_subalgebra_scan(alg);
  if (opt.json_mode()) {
    json j;
    j["command"] = "scan";
    j["dim"] = alg.dim();
    json arr = json::array();
    for (const ScanEntry& e : entries) {
      json item;
      item["subset"] = e.subset;
      item["labels"] = label_list(alg, e.subset);
      item.update(classification_json(alg, e.cls, opt));
      arr.push_back(std::move(item));
    }
    j["subsets"] = std::move(arr);
    emit(out, j);
  } else {
    for (const ScanEntry& e : entries) {
      out << "{" << label_list(alg, e.subset) << "} closed=" << yesno(e.cls.subalgebra);
      if (e.cls.subalgebra) {
        out << " tg=" << yesno(e.cls.totally_geodesic) << " minimal=" << yesno(e.cls.minimal)
            << " conformal=" << yesno(e.cls.conformal)
            << " riemannian=" << yesno(e.cls.riemannian);
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_complex(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt,
                const std::vector<int>& vertical, const std::string& j_file, int samples,
                std::uint64_t seed) {
  FoliationSplit split = make_split(alg, vertical);
  json j;
  j["command"] = "complex";
  j["vertical"] = label_list(alg, split.vertical);

  if (!j_file.empty()) {
    AlmostComplexStructure J = make_complex_structure(load_matrix(j_file));
    if (J.J.rows() != alg.dim())
      fail(errc::invalid_params, "J has size " + std::to_string(J.J.rows()) +
                                     " but the algebra has dimension " +
                                     std::to_string(alg.dim()));
    AdaptedResult adapted = adapted_check(J, split);
    j["adapted"] = adapted.adapted;
    if (!adapted.adapted) {
      json w;
      w["from"] = alg.label(adapted.from);
      w["to"] = alg.label(adapted.to);
      w["component"] = scalar_json(adapted.component, opt);
      j["witness"] = std::move(w);
    } else {
      IntegrabilityResult integ = integrability_check(alg, J);
      json ji;
      ji["integrable"] = integ.integrable;
      if (!integ.integrable) {
        ji["witness"] = json::array({alg.label(integ.i), alg.label(integ.j)});
        ji["defect"] = combo_str(integ.defect, alg, opt);
      }
      j["integrability"] = std::move(ji);
      CompatibilityResult compat = compatibility_check(J, split);
      json jc;
      jc["compatible"] = compat.compatible;
      if (!compat.compatible) {
        json w;
        w["u"] = alg.label(compat.u);
        w["v"] = alg.label(compat.v);
        w["equality"] = compat.equality;
        w["component"] = alg.label(compat.k);
        w["lhs"] = scalar_json(compat.lhs, opt);
        w["rhs"] = scalar_json(compat.rhs, opt);
        jc["witness"] = std::move(w);
      }
      j["compatibility"] = std::move(jc);
      SuperminimalResult sm = superminimal_check(J, split);
      json js;
      js["superminimal"] = sm.superminimal;
      if (!sm.superminimal) {
        json w;
        w["u"] = alg.label(sm.u);
        w["k"] = alg.label(sm.k);
        w["component"] = alg.label(sm.comp);
        w["value"] = scalar_json(sm.value, opt);
        js["witness"] = std::move(w);
      }
      j["superminimality"] = std::move(js);
      if (compat.compatible) {
        DualBLemmaReport lemma = dual_b_lemma_check(J, split);
        j["dual_b_lemma"] = lemma.holds;
      }
    }
  } else {
    SamplingReport rep = adapted_sampling_integrability(split, samples, seed);
    json js;
    js["samples"] = rep.samples;
    js["seed"] = seed;
    js["integrable_count"] = rep.integrable_count;
    js["reduction_identity_all"] = rep.reduction_identity_all;
    if (rep.first_integrable) js["first_integrable"] = *rep.first_integrable;
    j["sampling"] = std::move(js);
  }

  if (opt.json_mode()) {
    emit(out, j);
    return 0;
  }
  out << "vertical: " << j["vertical"].get<std::string>() << "\n";
  if (j.contains("adapted")) {
    out << "adapted: " << yesno(j["adapted"].get<bool>()) << "\n";
    if (j.contains("witness"))
      out << "  witness: J " << j["witness"]["from"].get<std::string>() << " leaks into "
          << j["witness"]["to"].get<std::string>() << "\n";
    if (j.contains("integrability")) {
      out << "integrable: " << yesno(j["integrability"]["integrable"].get<bool>());
      if (j["integrability"].contains("witness"))
        out << " (N[" << j["integrability"]["witness"][0].get<std::string>() << ","
            << j["integrability"]["witness"][1].get<std::string>()
            << "] = " << j["integrability"]["defect"].get<std::string>() << ")";
      out << "\n";
      out << "compatible: " << yesno(j["compatibility"]["compatible"].get<bool>()) << "\n";
      out << "superminimal: " << yesno(j["superminimality"]["superminimal"].get<bool>()) << "\n";
      if (j.contains("dual_b_lemma"))
        out << "dual_b_lemma: " << yesno(j["dual_b_lemma"].get<bool>()) << "\n";
    }
  } else {
    const json& js = j["sampling"];
    out << "samples: " << js["samples"].get<int>() << " (seed " << js["seed"].get<std::uint64_t>()
        << ")\n";
    out << "integrable: " << js["integrable_count"].get<int>() << "\n";
    out << "reduction_identity_all: " << yesno(js["reduction_identity_all"].get<bool>()) << "\n";
  }
  return 0;
}

json obstruction_json(const ObstructionReport& rep, const Options& opt) {
  json j;
  j["einstein"] = einstein_json(rep.einstein, opt);
  j["verdict"] = to_string(rep.verdict);
  if (rep.verdict == ObstructionVerdict::not_applicable) {
    j["reason"] = rep.reason;
    return j;
  }
  j["charpoly"] = poly_json(rep.f, opt);
  j["gcd"] = poly_json(rep.gcd, opt);
  j["gcd_degree"] = rep.gcd_degree;
  j["required_degree"] = rep.required_degree;
  j["spectrum"] = spectrum_json(rep.spectrum, opt);
  return j;
}

int cmd_obstruction(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt,
                    const std::optional<std::vector<int>>& vertical) {
  ObstructionReport rep = paired_eigenvalue_test(alg);
  json j;
  j["command"] = "obstruction";
  j.update(obstruction_json(rep, opt));
  std::optional<WBlockReport> wrep;
  if (vertical) {
    CurvatureOperator op = curvature_operator(alg);
    wrep = w_block_report(op, *vertical);
    json w;
    w["commutes"] = wrep->hermitian.commutes;
    if (wrep->hermitian.commutes) {
      w["det_RW"] = scalar_json(wrep->hermitian.det_RW, opt);
      w["det_H"] = scalar_json(wrep->hermitian.det_H, opt);
      w["det_H_squared"] = scalar_json(wrep->hermitian.det_H_sq, opt);
      w["charpoly"] = poly_json(wrep->f_w, opt);
      w["gcd"] = poly_json(wrep->gcd_w, opt);
      w["gcd_degree"] = wrep->gcd_w_degree;
      w["spectrum"] = spectrum_json(wrep->spectrum, opt);
    }
    j["w_block"] = std::move(w);
  }
  if (opt.json_mode()) {
    emit(out, j);
    return 0;
  }
  const EinsteinResult& e = rep.einstein;
  out << "einstein: " << yesno(e.einstein);
  if (e.einstein) out << " (constant " << scalar_str(e.constant, opt) << ")";
  out << "\n";
  if (rep.verdict == ObstructionVerdict::not_applicable) {
    out << "verdict: not_applicable (" << rep.reason << ")\n";
    return 0;
  }
  out << "charpoly: " << rep.f.str() << "\n";
  out << "gcd(f,f'): " << rep.gcd.str() << " (degree " << rep.gcd_degree << ", required >= "
      << rep.required_degree << ")\n";
  out << "spectrum:";
  for (const SpectrumEntry& s : rep.spectrum)
    out << " " << float_str(s.value, opt) << " (x" << s.multiplicity << ")";
  out << "\n";
  out << "verdict: " << to_string(rep.verdict) << "\n";
  if (wrep) {
    out << "w_block: commutes=" << yesno(wrep->hermitian.commutes);
    if (wrep->hermitian.commutes) {
      out << " det(R|W)=" << scalar_str(wrep->hermitian.det_RW, opt)
          << " det(H)^2=" << scalar_str(wrep->hermitian.det_H_sq, opt);
      out << "\n";
      out << "w_charpoly: " << wrep->f_w.str() << "\n";
      out << "w_gcd: " << wrep->gcd_w.str() << " (degree " << wrep->gcd_w_degree << ")\n";
      out << "w_spectrum:";
      for (const SpectrumEntry& s : wrep->spectrum)
        out << " " << float_str(s.value, opt) << " (x" << s.multiplicity << ")";
    }
    out << "\n";
  }
  return 0;
}

int cmd_catalog(std::ostream& out, const Options& opt, const std::string& name,
                const InputSpec& spec) {
  if (name.empty()) {
    if (opt.json_mode()) {
      json arr = json::array();
      for (const std::string& n : catalog_names()) {
        const CatalogInfo& info = catalog_info(n);
        json item;
        item["name"] = info.name;
        item["description"] = info.description;
        if (!info.params_help.empty()) item["params"] = info.params_help;
        arr.push_back(std::move(item));
      }
      json j;
      j["command"] = "catalog";
      j["entries"] = std::move(arr);
      emit(out, j);
    } else {
      for (const std::string& n : catalog_names()) {
        const CatalogInfo& info = catalog_info(n);
        out << info.name;
        if (!info.params_help.empty()) out << " [" << info.params_help << "]";
        out << "\n  " << info.description << "\n";
      }
    }
    return 0;
  }
  const CatalogInfo& info = catalog_info(name);
  InputSpec with_name = spec;
  with_name.input = name;
  MetricLieAlgebra alg = resolve_input(with_name);
  if (opt.json_mode()) {
    json j;
    j["command"] = "catalog";
    j["name"] = info.name;
    j["description"] = info.description;
    j["dim"] = alg.dim();
    json labels = json::array();
    for (int i = 0; i < alg.dim(); ++i) labels.push_back(alg.label(i));
    j["labels"] = std::move(labels);
    j["algebra"] = format_algebra(alg);
    json splits = json::array();
    for (const CatalogSplit& s : info.splits) {
      json item;
      item["vertical"] = s.display;
      item["indices"] = s.vertical;
      item["note"] = s.note;
      splits.push_back(std::move(item));
    }
    j["documented_splits"] = std::move(splits);
    if (!info.display_order.empty()) {
      json order = json::array();
      for (const auto& [a, b] : info.display_order) order.push_back(json::array({a, b}));
      j["display_order"] = std::move(order);
    }
    emit(out, j);
  } else {
    out << info.name << ": " << info.description << "\n";
    out << format_algebra(alg);
    for (const CatalogSplit& s : info.splits)
      out << "split {" << s.display << "}: " << s.note << "\n";
  }
  return 0;
}

int cmd_convention(std::ostream& out, const Options& opt) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"connection", "<nabla_{e_i} e_j, e_k> = (1/2)(c^k_{ij} - c^i_{jk} + c^j_{ki})"},
      {"curvature", "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z"},
      {"tensor", "R_{ijkl} = <R(e_i,e_j) e_k, e_l>"},
      {"operator", "Q[(i,j),(k,l)] = R_{ijkl}; diagonal entries are minus the sectional "
                   "curvatures of the basis planes"},
      {"ricci", "Ric_{ij} = sum_k R_{kijk}"},
      {"second_fundamental_form", "B_U V = H(nabla_U V) for vertical U, V"},
      {"oneill_a", "A_X Y = V(nabla_X Y) for horizontal X, Y"},
      {"duals", "A*_X U = -H(nabla_X U), B*_U X = -V(nabla_U X)"},
      {"conformal_functional",
       "nu(V) = (1/2)(L_V g)(X,X) for unit horizontal X; nu(V) = -V(ln lambda)"},
      {"metric", "the basis is orthonormal; structure constants are metric components"},
  };
  if (opt.json_mode()) {
    json j;
    j["command"] = "convention";
    for (const auto& [k, v] : rows) j[k] = v;
    emit(out, j);
  } else {
    for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  }
  return 0;
}

int cmd_report(std::ostream& out, const MetricLieAlgebra& alg, const Options& opt,
               const std::string& input, bool all,
               const std::optional<std::vector<int>>& foliation_vertical,
               std::optional<int> complex_samples, std::uint64_t seed) {
  json j;
  j["command"] = "report";
  j["input"] = input;
  j["dim"] = alg.dim();

  ValidationReport val = validate(alg);
  j["valid"] = val.valid();
  if (!val.valid()) {
    json issues = json::array();
    for (const ValidationIssue& issue : val.issues) issues.push_back(issue.describe(alg));
    j["issues"] = std::move(issues);
    if (opt.json_mode()) {
      emit(out, j);
    } else {
      out << "valid: no\n";
      for (const ValidationIssue& issue : val.issues) out << "  " << issue.describe(alg) << "\n";
    }
    return 1;
  }

  ScalarMatrix ric = ricci(alg);
  j["ricci"] = matrix_json(ric, opt);
  ObstructionReport obs = paired_eigenvalue_test(alg);
  j["einstein"] = einstein_json(obs.einstein, opt);
  j["obstruction"] = obstruction_json(obs, opt);

  if (all && alg.dim() >= 3) {
    std::vector<ScanEntry> entries = coordinate_subalgebra_scan(alg);
    json arr = json::array();
    for (const ScanEntry& e : entries) {
      json item;
      item["subset"] = e.subset;
      item["labels"] = label_list(alg, e.subset);
      item.update(classification_json(alg, e.cls, opt));
      arr.push_back(std::move(item));
    }
    j["scan"] = std::move(arr);
  }

  std::optional<FoliationSplit> split;
  if (foliation_vertical) {
    split = make_split(alg, *foliation_vertical);
    Classification cls = classify(*split);
    json f;
    f["vertical"] = label_list(alg, split->vertical);
    f.update(classification_json(alg, cls, opt));
    if (split->hdim() == 2) {
      CurvatureOperator op = curvature_operator(alg);
      ThetaIndependenceResult theta = theta_independence_check(op, split->vertical);
      f["theta_independence"] = theta.holds;
      RicciConditionResult rc = ricci_condition_check(*split);
      f["ricci_condition"] = rc.holds;
      BlockSplit blocks = block_split(op, split->vertical);
      f["block_residual_zero"] = blocks.invariant();
      if (blocks.invariant()) {
        WBlockReport wrep = w_block_report(op, split->vertical);
        json w;
        w["commutes"] = wrep.hermitian.commutes;
        if (wrep.hermitian.commutes) {
          w["det_RW"] = scalar_json(wrep.hermitian.det_RW, opt);
          w["det_H_squared"] = scalar_json(wrep.hermitian.det_H_sq, opt);
          w["gcd_degree"] = wrep.gcd_w_degree;
          w["spectrum"] = spectrum_json(wrep.spectrum, opt);
        }
        f["w_block"] = std::move(w);
      }
    }
    if (cls.subalgebra) {
      ONeillIdentityReport ids = oneill_identity_check(*split);
      f["oneill_identity_ii"] = ids.identity_ii_holds;
      if (ids.identity_iii_applicable) f["oneill_identity_iii"] = ids.identity_iii_holds;
    }
    j["foliation"] = std::move(f);
  }

  if (complex_samples) {
    if (!foliation_vertical)
      fail(errc::invalid_params, "--complex sampling needs --foliation to fix the split");
    FoliationSplit csplit = make_split(alg, *foliation_vertical);
    SamplingReport rep = adapted_sampling_integrability(csplit, *complex_samples, seed);
    json c;
    c["samples"] = rep.samples;
    c["seed"] = seed;
    c["integrable_count"] = rep.integrable_count;
    c["reduction_identity_all"] = rep.reduction_identity_all;
    j["complex_sampling"] = std::move(c);
  }

  if (opt.json_mode()) {
    emit(out, j);
    return 0;
  }

  out << "input: " << input << " (dim " << alg.dim() << ")\n";
  out << "valid: yes\n";
  out << "einstein: " << yesno(obs.einstein.einstein);
  if (obs.einstein.einstein) out << " (constant " << scalar_str(obs.einstein.constant, opt) << ")";
  out << "\n";
  out << "obstruction: " << to_string(obs.verdict);
  if (obs.verdict != ObstructionVerdict::not_applicable)
    out << " (gcd " << obs.gcd.str() << ", degree " << obs.gcd_degree << ", required >= "
        << obs.required_degree << ")";
  out << "\n";
  if (j.contains("scan")) {
    out << "scan:\n";
    for (const auto& item : j["scan"]) {
      out << "  {" << item["labels"].get<std::string>()
          << "} closed=" << yesno(item["subalgebra"].get<bool>());
      if (item["subalgebra"].get<bool>())
        out << " tg=" << yesno(item["totally_geodesic"].get<bool>())
            << " minimal=" << yesno(item["minimal"].get<bool>())
            << " conformal=" << yesno(item["conformal"].get<bool>());
      out << "\n";
    }
  }
  if (j.contains("foliation")) {
    const json& f = j["foliation"];
    out << "foliation {" << f["vertical"].get<std::string>() << "}:";
    if (f["subalgebra"].get<bool>()) {
      out << " tg=" << yesno(f["totally_geodesic"].get<bool>())
          << " conformal=" << yesno(f["conformal"].get<bool>());
      if (f.contains("theta_independence"))
        out << " theta_independent=" << yesno(f["theta_independence"].get<bool>());
      if (f.contains("ricci_condition"))
        out << " ricci_condition=" << yesno(f["ricci_condition"].get<bool>());
    } else {
      out << " not a subalgebra";
    }
    out << "\n";
  }
  if (j.contains("complex_sampling")) {
    const json& c = j["complex_sampling"];
    out << "complex sampling: " << c["integrable_count"].get<int>() << " integrable of "
        << c["samples"].get<int>() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact curvature toolkit for left-invariant metrics on Lie groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--float", opt.float_mode, "Render numbers as floating point");
  app.add_option("--tol", opt.tol, "Zero-snap tolerance for float rendering")
      ->capture_default_str();

  InputSpec spec;
  auto add_input = [&spec](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("input", spec.input, "Algebra file or catalog entry");
    if (required) o->required();
    cmd->add_option("--n", spec.n, "Family size for g1/g2");
    cmd->add_option("--dim", spec.n, "Dimension for abelian");
    cmd->add_option("--alpha", spec.alpha, "Comma-separated alpha list for g2");
  };

  std::string vertical_str;
  std::string basis_file;
  std::string j_file;
  int samples = 100;
  std::uint64_t seed = 1;
  bool report_all = false;
  std::string report_foliation;
  std::optional<int> report_complex;

  CLI::App* c_validate = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  add_input(c_validate);
  CLI::App* c_curv = app.add_subcommand("curvature", "Connection, curvature tensor and Ricci");
  add_input(c_curv);
  CLI::App* c_ricci = app.add_subcommand("ricci", "Ricci matrix");
  add_input(c_ricci);
  CLI::App* c_einstein = app.add_subcommand("einstein", "Einstein check");
  add_input(c_einstein);
  CLI::App* c_operator = app.add_subcommand("operator", "Curvature operator on the exterior square");
  add_input(c_operator);
  c_operator->add_option("--basis-order", basis_file, "Wedge-order file");
  CLI::App* c_fol = app.add_subcommand("foliation", "Analyze the splitting induced by a vertical span");
  add_input(c_fol);
  c_fol->add_option("--vertical", vertical_str, "Comma-separated labels or indices")->required();
  CLI::App* c_scan = app.add_subcommand("scan", "Classify every coordinate subset of size n-2");
  add_input(c_scan);
  CLI::App* c_complex = app.add_subcommand("complex", "Almost complex structure checks");
  add_input(c_complex);
  c_complex->add_option("--vertical", vertical_str, "Comma-separated labels or indices")
      ->required();
  c_complex->add_option("--j", j_file, "Matrix file with J");
  c_complex->add_option("--sample", samples, "Number of random adapted structures")
      ->capture_default_str();
  c_complex->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  CLI::App* c_obs = app.add_subcommand("obstruction", "Paired-eigenvalue necessary condition");
  add_input(c_obs);
  c_obs->add_option("--vertical", vertical_str, "Also analyze the mixed block of this split");
  CLI::App* c_catalog = app.add_subcommand("catalog", "List or describe built-in entries");
  std::string catalog_name;
  c_catalog->add_option("name", catalog_name, "Entry name");
  c_catalog->add_option("--n", spec.n, "Family size for g1/g2");
  c_catalog->add_option("--dim", spec.n, "Dimension for abelian");
  c_catalog->add_option("--alpha", spec.alpha, "Comma-separated alpha list for g2");
  CLI::App* c_report = app.add_subcommand("report", "Combined analysis pipeline");
  add_input(c_report);
  c_report->add_flag("--all", report_all, "Include the coordinate-subset scan");
  c_report->add_option("--foliation", report_foliation, "Vertical list for foliation analysis");
  c_report->add_option("--complex", report_complex, "Sample count for adapted structures");
  c_report->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  CLI::App* c_conv = app.add_subcommand("convention", "Print the calibrated sign conventions");

  std::vector<const char*> argv;
  std::string prog = "liecurv";
  argv.push_back(prog.c_str());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's per-error exit codes onto the documented contract:
    // 0 for --help/--version, 1 for any usage error.
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(c_validate)) return cmd_validate(out, resolve_input(spec), opt);
    if (app.got_subcommand(c_curv)) return cmd_curvature(out, resolve_input(spec), opt);
    if (app.got_subcommand(c_ricci)) return cmd_ricci(out, resolve_input(spec), opt);
    if (app.got_subcommand(c_einstein)) return cmd_einstein(out, resolve_input(spec), opt);
    if (app.got_subcommand(c_operator)) {
      MetricLieAlgebra alg = resolve_input(spec);
      WedgeBasis basis = WedgeBasis::lexicographic(alg.dim());
      if (!basis_file.empty())
        basis = load_wedge_order(basis_file, alg.dim());
      else if (spec.is_catalog())
        basis = catalog_wedge_basis(spec.input, alg.dim());
      return cmd_operator(out, alg, opt, basis);
    }
    if (app.got_subcommand(c_fol)) {
      MetricLieAlgebra alg = resolve_input(spec);
      return cmd_foliation(out, alg, opt, parse_vertical_list(alg, vertical_str));
    }
    if (app.got_subcommand(c_scan)) return cmd_scan(out, resolve_input(spec), opt);
    if (app.got_subcommand(c_complex)) {
      MetricLieAlgebra alg = resolve_input(spec);
      if (!j_file.empty() && c_complex->count("--sample"))
        fail(errc::invalid_params, "--j and --sample are mutually exclusive");
      return cmd_complex(out, alg, opt, parse_vertical_list(alg, vertical_str), j_file, samples,
                         seed);
    }
    if (app.got_subcommand(c_obs)) {
      MetricLieAlgebra alg = resolve_input(spec);
      std::optional<std::vector<int>> vertical;
      if (!vertical_str.empty()) vertical = parse_vertical_list(alg, vertical_str);
      return cmd_obstruction(out, alg, opt, vertical);
    }
    if (app.got_subcommand(c_catalog)) return cmd_catalog(out, opt, catalog_name, spec);
    if (app.got_subcommand(c_report)) {
      MetricLieAlgebra alg = resolve_input(spec);
      std::optional<std::vector<int>> fol;
      if (!report_foliation.empty()) fol = parse_vertical_list(alg, report_foliation);
      return cmd_report(out, alg, opt, spec.input, report_all, fol, report_complex, seed);
    }
    if (app.got_subcommand(c_conv)) return cmd_convention(out, opt);
    err << "error: no command selected\n";
    return 1;
  } catch (const error& e) {
    err << "error[" << errc_name(e.code()) << "]: " << e.message() << "\n";
    return e.code() == errc::internal_error ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liecurv::cli
