// bootstrap.hpp - Planning and validation of bootstrap certificates
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_BOOTSTRAP_HPP
#define REGULA_BOOTSTRAP_HPP

#include "regula/certificate.hpp"
#include "regula/classifier.hpp"

#include <optional>
#include <string>

namespace regula {

/// Case split of the bootstrap, driven by the first equation's coupling
/// power against p_c - 1 (= p_c/p'_c exactly):
///   I: p < p_c - 1,  II: p = p_c - 1,  III: p > p_c - 1.
/// An unbounded critical exponent always lands in Case I.
/// Expects swap-normalized parameters (q+s >= p+r).
CaseTag case_of(const SystemParams& params);

/// Exit threshold of the Case I single-equation chain: the supremum-norm
/// step fires once the u-exponent strictly exceeds this value (the v-norm
/// staying at k). Exposed for the chain-length bound.
ExtRational case1_exit_threshold(const SystemParams& params, const ExtRational& k);

/// Plans a certificate for a RegularityCertified parameter tuple and
/// validates it before returning. Throws std::domain_error if the verdict
/// is not RegularityCertified and std::logic_error if planning fails for a
/// certified tuple (a defect; the failure message names the violated
/// inequality set).
Certificate plan(const SystemParams& params);

/// The deterministic parameter choice behind plan(); reproducible
/// bit-for-bit (it runs the same midpoint/halving search).
SelectedParameters select_parameters(const SystemParams& params);

struct Violation {
  int step = -1;  // -1 for certificate-level violations
  std::string what;
};

struct ValidationReport {
  bool ok = true;
  std::optional<Violation> first_violation;
};

struct ValidateOptions {
  // The displayed Holder combinations in the source estimates are strict
  // ("< 1"); the engine accepts = 1 since the base space B^1 is defined.
  // Strict mode reproduces the displayed inequality verbatim.
  bool strict_holder = false;
};

/// Re-derives every invariant of the certificate under exact arithmetic,
/// independent of how it was produced. Never throws on bad certificates:
/// the report carries the first violated inequality.
ValidationReport validate(const Certificate& cert, ValidateOptions opts = {});

/// As above, but also requires cert.params to equal `params` after the
/// engine's own swap normalization.
ValidationReport validate(const Certificate& cert, const SystemParams& params,
                          ValidateOptions opts = {});

}  // namespace regula

#endif
