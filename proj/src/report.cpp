#include "mt/report.hpp"

#include <sstream>

namespace mt {

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(std::int64_t v, int) { return std::to_string(v); }

std::string optional_str(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

nlohmann::ordered_json level_row_to_json(const LevelRow& row, bool with_stabilized) {
  nlohmann::ordered_json j;
  j["n"] = std::to_string(row.n);
  j["zero"] = row.zero;
  if (!row.zero) {
    j["mu"] = str(row.mu);
    j["lambda"] = str(row.lambda, 0);
    j["is_maximal"] = row.is_maximal;
    j["mu_cohomological"] = str(row.mu_cohomological);
    j["mu_neron"] = row.mu_neron ? nlohmann::ordered_json(std::to_string(*row.mu_neron)) : nlohmann::ordered_json(nullptr);
  }
  j["integral"] = row.integral;
  if (with_stabilized && row.stabilized_known) {
    j["stabilized"] = {{"mu", str(row.stab_mu)}, {"lambda", str(row.stab_lambda, 0)}, {"integral", row.stab_integral}};
  }
  return j;
}

nlohmann::ordered_json boundary_to_json(const BoundaryCongruence& b) {
  nlohmann::ordered_json j;
  j["p"] = std::to_string(b.p);
  j["solvable"] = b.solvable;
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < b.class_labels.size(); ++i) {
    nlohmann::ordered_json c;
    c["label"] = b.class_labels[i];
    c["representative"] = b.class_representatives[i].str();
    if (b.solvable) c["psi"] = std::to_string(b.psi[i]);
    classes.push_back(c);
  }
  j["classes"] = classes;
  if (!b.solvable) {
    auto eqs = nlohmann::ordered_json::array();
    for (const auto& e : b.certificate)
      eqs.push_back({{"generator", "(" + std::to_string(e.c) + ":" + std::to_string(e.d) + ")"},
                     {"multiplier", std::to_string(e.multiplier)},
                     {"rhs", std::to_string(e.rhs)}});
    j["refutation"] = {{"equations", eqs}, {"combined_rhs", std::to_string(b.certificate_rhs)}};
  }
  return j;
}

nlohmann::ordered_json maximality_to_json(const MaximalityVerdict& m) {
  nlohmann::ordered_json j;
  j["t"] = std::to_string(m.t);
  j["m"] = std::to_string(m.m);
  j["criterion_holds"] = m.criterion_holds;
  j["alpha"] = m.alpha ? nlohmann::ordered_json(std::to_string(*m.alpha)) : nlohmann::ordered_json(nullptr);
  j["exhaustive"] = m.exhaustive;
  j["conclusions_applicable"] = m.conclusions_applicable;
  j["conclusions_verified"] = m.conclusions_verified;
  return j;
}

nlohmann::ordered_json report_to_json(const DichotomyReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["conductor"] = std::to_string(r.conductor);
  j["p"] = std::to_string(r.p);
  j["n_max"] = std::to_string(r.n_max);
  j["mode"] = mode_name(r.mode);
  j["a_p"] = std::to_string(r.a_p);
  j["phi_at_zero"] = to_string(r.phi_at_zero);
  j["normalization_scalar"] = to_string(r.normalization_scalar);
  j["normalization_shift"] = str(r.normalization_shift);
  j["lratio_valuation"] = r.lratio_valuation ? nlohmann::ordered_json(std::to_string(*r.lratio_valuation)) : nlohmann::ordered_json(nullptr);
  j["precision"] = str(r.precision);
  j["alpha"] = r.alpha;
  auto levels = nlohmann::ordered_json::array();
  for (const auto& row : r.levels) levels.push_back(level_row_to_json(row, true));
  j["levels"] = levels;
  j["stabilized"] = r.stabilized;
  j["norm_relation_verified"] = r.norm_relation_verified;
  auto norms = nlohmann::ordered_json::array();
  for (const auto& n : r.norm_relations)
    norms.push_back({{"n", std::to_string(n.n)}, {"residual_zero", n.residual_zero},
                     {"residual_valuation_at_least", str(n.residual_valuation_bound)}, {"precision", str(n.precision)}});
  j["norm_relations"] = norms;
  j["verdict"] = verdict_name(r.verdict);
  j["diagnostics"] = r.diagnostics;
  j["boundary_congruence"] = r.boundary ? boundary_to_json(*r.boundary) : nlohmann::ordered_json(nullptr);
  j["maximality_criterion"] = r.maximality ? maximality_to_json(*r.maximality) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json table_to_json(const InvariantsTable& t) {
  nlohmann::ordered_json j;
  j["label"] = t.label;
  j["conductor"] = std::to_string(t.conductor);
  j["p"] = std::to_string(t.p);
  j["n_max"] = std::to_string(t.n_max);
  j["mode"] = mode_name(t.mode);
  j["a_p"] = std::to_string(t.a_p);
  j["phi_at_zero"] = to_string(t.phi_at_zero);
  j["normalization_scalar"] = to_string(t.normalization_scalar);
  j["normalization_shift"] = str(t.normalization_shift);
  j["lratio_valuation"] = t.lratio_valuation ? nlohmann::ordered_json(std::to_string(*t.lratio_valuation)) : nlohmann::ordered_json(nullptr);
  auto levels = nlohmann::ordered_json::array();
  for (const auto& row : t.levels) levels.push_back(level_row_to_json(row, false));
  j["levels"] = levels;
  return j;
}

std::string levels_to_csv(const std::vector<LevelRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',';
    if (r.zero)
      os << ",,,";
    else
      os << r.mu << ',' << r.lambda << ',' << (r.is_maximal ? "true" : "false") << ',';
    os << (r.integral ? "true" : "false") << ',';
    if (r.zero)
      os << ",,";
    else
      os << r.mu_cohomological << ',' << optional_str(r.mu_neron) << ',';
    if (r.stabilized_known) os << r.stab_mu << ',' << r.stab_lambda;
    else os << ',';
    os << '\n';
  }
  return os.str();
}

namespace {

void levels_text(std::ostringstream& os, const std::vector<LevelRow>& rows, bool stabilized) {
  os << "  n    mu  lambda  maximal  integral  mu_coh  mu_neron";
  if (stabilized) os << "  stab_mu  stab_lambda";
  os << '\n';
  for (const auto& r : rows) {
    char line[160];
    if (r.zero) {
      std::snprintf(line, sizeof line, "%3d  theta_n = 0\n", r.n);
      os << line;
      continue;
    }
    std::snprintf(line, sizeof line, "%3d %5ld %7lld  %-7s  %-8s %6ld  %8s", r.n, r.mu, static_cast<long long>(r.lambda),
                  r.is_maximal ? "yes" : "no", r.integral ? "yes" : "no", r.mu_cohomological,
                  r.mu_neron ? std::to_string(*r.mu_neron).c_str() : "-");
    os << line;
    if (stabilized && r.stabilized_known) {
      std::snprintf(line, sizeof line, "  %7ld  %11lld", r.stab_mu, static_cast<long long>(r.stab_lambda));
      os << line;
    }
    os << '\n';
  }
}

}  // namespace

std::string boundary_to_text(const BoundaryCongruence& b) {
  std::ostringstream os;
  os << "boundary congruence mod " << b.p << ": " << (b.solvable ? "solvable" : "unsolvable") << '\n';
  for (std::size_t i = 0; i < b.class_labels.size(); ++i) {
    os << "  class " << b.class_labels[i] << "  rep " << b.class_representatives[i].str();
    if (b.solvable) os << "  psi = " << b.psi[i];
    os << '\n';
  }
  if (!b.solvable) {
    os << "  refutation: sum of multiplier * (equation at generator) gives 0 = " << b.certificate_rhs << '\n';
    for (const auto& e : b.certificate)
      os << "    (" << e.c << ":" << e.d << ")  multiplier " << e.multiplier << "  rhs " << e.rhs << '\n';
  }
  return os.str();
}

std::string report_to_text(const DichotomyReport& r) {
  std::ostringstream os;
  os << "curve " << (r.label.empty() ? "(unlabelled)" : r.label) << "  N = " << r.conductor << "  p = " << r.p
     << "  a_p = " << r.a_p << "  mode = " << mode_name(r.mode) << '\n';
  os << "phi({oo}-{0}) = " << to_string(r.phi_at_zero) << "  normalization scalar = " << to_string(r.normalization_scalar)
     << " (mu shift " << r.normalization_shift << ")\n";
  if (r.lratio_valuation) os << "ord_p(L(E,1)/Omega_E) = " << *r.lratio_valuation << '\n';
  os << "alpha = " << r.alpha << " mod " << r.p << "^" << r.precision << '\n';
  levels_text(os, r.levels, true);
  os << "stabilized invariants constant on top levels: " << (r.stabilized ? "yes" : "no") << '\n';
  os << "norm relation verified: " << (r.norm_relation_verified ? "yes" : "no") << '\n';
  if (r.boundary) os << boundary_to_text(*r.boundary);
  if (r.maximality)
    os << "congruence criterion mod " << r.p << "^" << r.maximality->t << ": "
       << (r.maximality->criterion_holds ? "holds with alpha = " + std::to_string(*r.maximality->alpha) : std::string("fails"))
       << '\n';
  for (const auto& d : r.diagnostics) os << "note: " << d << '\n';
  os << "verdict: " << verdict_name(r.verdict) << '\n';
  return os.str();
}

std::string table_to_text(const InvariantsTable& t) {
  std::ostringstream os;
  os << "curve " << (t.label.empty() ? "(unlabelled)" : t.label) << "  N = " << t.conductor << "  p = " << t.p
     << "  a_p = " << t.a_p << "  mode = " << mode_name(t.mode) << '\n';
  os << "phi({oo}-{0}) = " << to_string(t.phi_at_zero) << "  normalization scalar = " << to_string(t.normalization_scalar)
     << " (mu shift " << t.normalization_shift << ")\n";
  levels_text(os, t.levels, false);
  return os.str();
}

std::string render(const DichotomyReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return report_to_json(r).dump(2) + "\n";
    case OutputFormat::Csv: return levels_to_csv(r.levels);
    case OutputFormat::Text: return report_to_text(r);
  }
  return {};
}

std::string render(const InvariantsTable& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return table_to_json(t).dump(2) + "\n";
    case OutputFormat::Csv: return levels_to_csv(t.levels);
    case OutputFormat::Text: return table_to_text(t);
  }
  return {};
}

std::string render(const BoundaryCongruence& b, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return boundary_to_json(b).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "class,representative,psi\n";
      for (std::size_t i = 0; i < b.class_labels.size(); ++i)
        os << '"' << b.class_labels[i] << "\"," << b.class_representatives[i].str() << ','
           << (b.solvable ? std::to_string(b.psi[i]) : "") << '\n';
      return os.str();
    }
    case OutputFormat::Text: return boundary_to_text(b);
  }
  return {};
}

}  // namespace mt
