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

#include "qnet/protocols/analytic.hpp"

#include <cmath>

#include "qnet/channels/bell.hpp"
#include "qnet/core/errors.hpp"

namespace qnet {

namespace {

Matrix bell_projector(BellLabel label) { return bell_state(label).projector().matrix(); }

}  // namespace

double analytic_purified_fidelity(double F) {
  if (!(F >= 0.0 && F <= 1.0)) throw InvalidArgument("analytic_purified_fidelity: F outside [0,1]");
  const double a = F * F;
  const double b = (1.0 - F) * (1.0 - F);
  return a / (a + b);
}

DampedClosedForm analytic_damped_postselect(double p, Selection selection) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("analytic_damped_postselect: p outside [0,1]");
  DampedClosedForm out;
  switch (selection) {
    case Selection::kGG: {
      const double norm = 2.0 * (1.0 - p + p * p);
      out.post_state = Matrix::Zero(4, 4);
      out.post_state(0, 0) = p * p;
      out.post_state(1, 1) = (1.0 - p) * (1.0 - p);
      out.post_state(1, 2) = out.post_state(2, 1) = 1.0 - p;
      out.post_state(2, 2) = 1.0;
      out.post_state /= norm;
      out.fidelity = (2.0 - p) * (2.0 - p) / (4.0 * (1.0 - p + p * p));
      out.success = (1.0 - p + p * p) / 2.0;
      break;
    }
    case Selection::kEE:
      out.post_state = bell_projector(BellLabel::kPsiPlus);
      out.fidelity = 1.0;
      out.success = (1.0 - p) / 2.0;
      break;
    case Selection::kBothConsistent:
      throw InvalidArgument("analytic_damped_postselect: choose gg or ee");
  }
  return out;
}

CombinedClosedForm analytic_combined_postselect(const ErrorParams& params, Selection selection) {
  params.validate();
  const double ed = params.eps_d;
  const double ep = params.eps_p;
  CombinedClosedForm out;
  switch (selection) {
    case Selection::kGG: {
      const double d = 1.0 - 2.0 * ed + 4.0 * ed * ed;
      const double c = (1.0 - 2.0 * ep) * (1.0 - 2.0 * ep);
      out.post_state = Matrix::Zero(4, 4);
      out.post_state(0, 0) = 4.0 * ed * ed;
      out.post_state(1, 1) = (1.0 - 2.0 * ed) * (1.0 - 2.0 * ed);
      out.post_state(1, 2) = out.post_state(2, 1) = c;
      out.post_state(2, 2) = 1.0;
      out.post_state /= 2.0 * d;
      out.fidelity = (1.0 - ed - 2.0 * ep + ed * ed + 2.0 * ep * ep) / d;
      out.success = 0.5 - ed + 2.0 * ed * ed;
      out.ground_population = 2.0 * ed * ed / d;
      break;
    }
    case Selection::kEE: {
      out.eps_p_prime = (2.0 * ep - 2.0 * ep * ep - ed) / (1.0 - 2.0 * ed);
      out.post_state = (1.0 - out.eps_p_prime) * bell_projector(BellLabel::kPsiPlus) +
                       out.eps_p_prime * bell_projector(BellLabel::kPsiMinus);
      out.fidelity = 1.0 - out.eps_p_prime;
      out.success = 0.5 - ed;
      break;
    }
    case Selection::kBothConsistent:
      throw InvalidArgument("analytic_combined_postselect: choose gg or ee");
  }
  return out;
}

double alternative_ee_phase_error(const ErrorParams& params) {
  params.validate();
  const double ed = params.eps_d;
  const double ep = params.eps_p;
  return (2.0 * ep * ep - 2.0 * ep + 2.0 * ed) / (1.0 - 2.0 * ed);
}

}  // namespace qnet
