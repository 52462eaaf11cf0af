#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "hkv/corr.hpp"
#include "hkv/report.hpp"

namespace hkv {

struct FourierKit {
  HKRingPtr ring;
  Correspondence B;
  CohClass b;
  Correspondence b1, b2;
  Correspondence delta;
  std::array<Correspondence, 5> powers;      // B^0 … B^4
  Correspondence fifth_power;                // B^5, asserted zero
  std::array<Correspondence, 5> projectors;  // π^0, π^2, π^4, π^6, π^8
  Correspondence exp_B;                      // Σ_{k≤4} B^k / k!
};

Correspondence bb_correspondence(const HKRingPtr& ring);
FourierKit make_fourier_kit(const HKRingPtr& ring);

// C² − [2c Δ − 2/(r+2)(c₁+c₂)·C − 1/(r(r+2))(2c₁² − r c₁c₂ + 2c₂²)] with c = ι_Δ*C.
Correspondence bb_identity_residual(const FourierKit& kit, const Correspondence& C);

Report verify_bb_square(const FourierKit& kit);
Report verify_bb_powers(const FourierKit& kit);

struct ProjectorSuite {
  std::array<Correspondence, 5> pi;
  Report report;
};
ProjectorSuite kunneth_projectors(const FourierKit& kit);

CohClass fourier_transform(const FourierKit& kit, const CohClass& x);
Report fourier_square_spectrum(const FourierKit& kit);
Report verify_uniqueness(const FourierKit& kit, std::size_t sample_count, std::uint64_t seed);
Report mck_vanishing(const FourierKit& kit);

// Diagonal sign matrices A of size r solving 2A² + (tr A)A − (r+2)I = 0,
// returned as the list of negative-entry counts; exhaustive over 2^r patterns.
std::vector<std::size_t> sign_solutions_exhaustive(std::size_t r);
// Same question decided per negative count k (the equation only sees k).
std::vector<std::size_t> sign_solutions_by_count(std::size_t r);

}  // namespace hkv
