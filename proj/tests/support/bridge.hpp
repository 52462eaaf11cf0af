#pragma once

#include "hkv/corr.hpp"
#include "hkv/lcg.hpp"
#include "oracle.hpp"

namespace bridge {

oracle::Grid to_grid(const hkv::QuadraticSpace& q);
oracle::Fujiki to_fujiki(const hkv::HKRing& ring);

// Library class of a polynomial, built with library cups of H² basis classes.
hkv::CohClass to_class(const hkv::RingPtr& ring, const oracle::Poly& p);
// Polynomial with the same H² and Sym² coordinates (degrees 0, 2, 4 only).
oracle::Poly to_poly(const hkv::HKRing& ring, const hkv::CohClass& x);

// ∫∫ C·(p ⊗ q) through library pairing functionals.
hkv::Rational corr_pair(const hkv::Correspondence& c, const hkv::CohClass& p, const hkv::CohClass& q);

hkv::QuadraticSpace random_space(std::size_t rank, hkv::Lcg64& rng);
hkv::CohClass random_class(const hkv::RingPtr& ring, hkv::Lcg64& rng, int degree, std::size_t nonzeros);
hkv::Correspondence random_corr(const hkv::RingPtr& ring, hkv::Lcg64& rng, std::size_t blocks, std::size_t nonzeros);

}  // namespace bridge
