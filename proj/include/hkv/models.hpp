#pragma once

#include <cstddef>
#include <memory>

#include "hkv/corr.hpp"
#include "hkv/fourier.hpp"
#include "hkv/report.hpp"

namespace hkv {

struct K3Model {
  std::shared_ptr<const SurfaceRing> ring;
  CohClass point;
  Rational c2_degree = 24;
};

K3Model make_k3_model(QuadraticSpace space, Rational c2_degree = 24);

// [Δ_S] − (b₁+b₂)/r_S against the pure inverse-form correspondence, the
// Euler degree of the diagonal, and π²·π² = (c2_degree − 2) [pt]⊗[pt].
Report k3_intro_check(const K3Model& m);

struct K3HilbModel {
  K3Model base;
  HKRingPtr ring;
  CohClass delta;  // the exceptional direction, q(δ, δ) = −2
  CohClass point_class;  // S_o, the class of {x} × S pushed to the Hilbert square
  Correspondence incidence;
  Correspondence line_bundle;  // [L]
  CohClass c2;
};

K3HilbModel build_k3hilb_model(const K3Model& k3);
// `full` also runs the identities that hard-code the rank-22 constants.
Report verify_k3hilb(const K3HilbModel& m, bool full = true);

struct FanoModel {
  QuadraticSpace b0;
  std::size_t h2_index = 0;
  HKRingPtr ring;
  CohClass g;
  CohClass c;
  Correspondence incidence;
  Correspondence gamma_h;
  Correspondence gamma_h2;
  Correspondence gamma_phi;
  CohClass sigma2;
};

FanoModel build_fano_model(const QuadraticSpace& b0, std::size_t h2_index);
Report verify_fano_incidence(const FanoModel& m);
Report verify_phi(const FanoModel& m);

}  // namespace hkv
