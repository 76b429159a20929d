// Copyright 2026 The qnetsim Authors
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

#include "qnet/protocols/discrepancy.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "qnet/channels/bell.hpp"
#include "qnet/channels/error_channels.hpp"
#include "qnet/protocols/analytic.hpp"
#include "qnet/protocols/purification.hpp"

namespace qnet {

namespace {

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string params_p(double p) { return "p=" + fmt(p); }

std::string params_eps(const ErrorParams& e) { return "eps_d=" + fmt(e.eps_d) + ", eps_p=" + fmt(e.eps_p); }

}  // namespace

DiscrepancyReport build_discrepancy_report(double tol) {
  DiscrepancyReport r;
  auto add = [&](DiscrepancyEntry e) {
    e.agrees = std::abs(e.reference_value - e.oracle_value) <= tol;
    r.entries.push_back(std::move(e));
  };

  // One-sided flip channels on psi-: weight of the error Bell state.
  for (double p : {0.1, 0.2}) {
    const auto bit = bell_weights(one_sided_bell_error(ChannelKind::kBitFlip, p).matrix());
    add({"bit-flip error state weights", params_p(p), "weight of phi-", "p/2", p / 2.0, bit.phi_minus, false,
         "Kraus pair {sqrt(1-p) I, sqrt(p) X} on qubit B"});
    add({"bit-flip error state weights", params_p(p), "weight of psi-", "1 - p/2", 1.0 - p / 2.0, bit.psi_minus,
         false, ""});
    const auto ph = bell_weights(one_sided_bell_error(ChannelKind::kPhaseFlip, p).matrix());
    add({"phase-flip error state weights", params_p(p), "weight of psi+", "p/2", p / 2.0, ph.psi_plus, false,
         "Kraus pair {sqrt(1-p) I, sqrt(p) Z} on qubit B"});
    add({"phase-flip error state weights", params_p(p), "fidelity to psi-", "1 - p/2", 1.0 - p / 2.0,
         ph.psi_minus, false, ""});
  }

  // Combined damping/phase model through the 16-dimensional bit-purification circuit.
  bool all_primary = true;
  bool any_alternative = false;
  for (double ed : {0.05, 0.1}) {
    for (double ep : {0.02, 0.05}) {
      const ErrorParams e{0.0, ed, ep};
      const auto rho = combined_error_operator(e);
      const auto ee = purify_raw(rho, rho, Scheme::kBit, Selection::kEE);
      const Vector minus = bell_state(BellLabel::kPsiMinus, {"Q2A", "Q2B"}).amplitudes();
      const double eps_oracle = minus.dot(ee.post_state.matrix() * minus).real();
      const auto closed = analytic_combined_postselect(e, Selection::kEE);
      const std::string note = combined_error_is_physical(e)
                                   ? "input state is positive semidefinite"
                                   : "input operator has a negative eigenvalue (eps_p(1-eps_p) < eps_d/2); "
                                     "oracle run on the raw operator";
      DiscrepancyEntry a{"combined-error ee phase error", params_eps(e), "eps_p'",
                         "(2 eps_p - 2 eps_p^2 - eps_d)/(1 - 2 eps_d)", closed.eps_p_prime, eps_oracle, false, note};
      add(a);
      all_primary = all_primary && r.entries.back().agrees;
      DiscrepancyEntry b{"combined-error ee phase error", params_eps(e), "eps_p'",
                         "(2 eps_p^2 - 2 eps_p + 2 eps_d)/(1 - 2 eps_d)", alternative_ee_phase_error(e), eps_oracle,
                         false, note};
      add(b);
      any_alternative = any_alternative || r.entries.back().agrees;
      add({"combined-error ee success", params_eps(e), "success probability", "1/2 - eps_d", closed.success,
           ee.success_prob, false, ""});
      const auto gg = purify_raw(rho, rho, Scheme::kBit, Selection::kGG);
      const auto gg_closed = analytic_combined_postselect(e, Selection::kGG);
      add({"combined-error gg fidelity", params_eps(e), "fidelity to psi+",
           "(1 - eps_d - 2 eps_p + eps_d^2 + 2 eps_p^2)/(1 - 2 eps_d + 4 eps_d^2)", gg_closed.fidelity, gg.fidelity,
           false, ""});
    }
  }

  r.findings.push_back(
      "One-sided bit and phase flips: the Kraus oracle gives mixture weights (1-p, p); the reference weights "
      "(1-p/2, p/2) do not follow from the stated Kraus operators.");
  if (all_primary && !any_alternative) {
    r.findings.push_back(
        "Combined error, ee outcome: the oracle phase error matches (2 eps_p - 2 eps_p^2 - eps_d)/(1 - 2 eps_d) at "
        "every grid point and does not match (2 eps_p^2 - 2 eps_p + 2 eps_d)/(1 - 2 eps_d).");
  } else if (any_alternative && !all_primary) {
    r.findings.push_back(
        "Combined error, ee outcome: the oracle phase error matches (2 eps_p^2 - 2 eps_p + 2 eps_d)/(1 - 2 eps_d).");
  } else {
    r.findings.push_back("Combined error, ee outcome: the oracle phase error matches neither closed form everywhere.");
  }
  r.findings.push_back(
      "The gg and ee outcomes of bit purification on psi- inputs both produce psi+; fidelities of kept states are "
      "scored against psi+.");
  r.findings.push_back(
      "Psi(+/-) is taken as (|eg> +/- |ge>)/sqrt2; reconstructed states are constrained to be Hermitian, unit trace "
      "and positive semidefinite.");
  return r;
}

std::string DiscrepancyReport::to_markdown() const {
  std::ostringstream os;
  os << "# Closed-form vs oracle discrepancy report\n\n";
  os << "## Findings\n\n";
  for (const auto& f : findings) os << "- " << f << "\n";
  os << "\n## Entries\n\n";
  os << "| topic | parameters | quantity | reference formula | reference | oracle | agrees | note |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    os << "| " << e.topic << " | " << e.parameters << " | " << e.quantity << " | `" << e.reference_formula << "` | "
       << fmt(e.reference_value, 10) << " | " << fmt(e.oracle_value, 10) << " | " << (e.agrees ? "yes" : "no")
       << " | " << e.note << " |\n";
  }
  return os.str();
}

nlohmann::json DiscrepancyReport::to_json() const {
  nlohmann::json j;
  j["findings"] = findings;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"topic", e.topic},
                            {"parameters", e.parameters},
                            {"quantity", e.quantity},
                            {"reference_formula", e.reference_formula},
                            {"reference_value", e.reference_value},
                            {"oracle_value", e.oracle_value},
                            {"agrees", e.agrees},
                            {"note", e.note}});
  }
  return j;
}

}  // namespace qnet
