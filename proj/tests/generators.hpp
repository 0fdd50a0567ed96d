// Seeded random generators for property tests.
#pragma once

#include <algorithm>
#include <random>

#include "cqg/freealg.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline cqg::GaussianRational gaussian(Rng& rng) {
  mpq_class re(uniform(rng, -4, 4), static_cast<unsigned long>(uniform(rng, 1, 3)));
  mpq_class im(uniform(rng, -2, 2), static_cast<unsigned long>(uniform(rng, 1, 2)));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

inline cqg::LaurentPoly laurent(Rng& rng, int span = 3) {
  cqg::LaurentPoly p;
  for (int k = uniform(rng, 0, 3); k > 0; --k) p += cqg::LaurentPoly(gaussian(rng), uniform(rng, -span, span));
  return p;
}

inline cqg::RationalFn rational(Rng& rng) {
  cqg::LaurentPoly den = laurent(rng, 2);
  if (den.is_zero()) den = cqg::LaurentPoly(1);
  return {laurent(rng), den};
}

inline cqg::PiScalar scalar(Rng& rng) { return {rational(rng), rational(rng)}; }

// Laurent coefficients only, so that products stay cheap.
inline cqg::PiScalar laurent_scalar(Rng& rng) { return {laurent(rng), laurent(rng)}; }

inline cqg::Word word(Rng& rng, int rank, int len) {
  cqg::Word w;
  for (int k = 0; k < len; ++k) w += static_cast<char>(uniform(rng, 0, rank - 1));
  return w;
}

inline cqg::FreeElement element(Rng& rng, int rank, int max_len) {
  cqg::FreeElement x;
  for (int k = uniform(rng, 1, 3); k > 0; --k)
    x.add(word(rng, rank, uniform(rng, 0, max_len)), laurent_scalar(rng));
  return x;
}

// Random permutation of a fixed multiset of letters, so all words share one weight.
inline cqg::FreeElement homogeneous(Rng& rng, const cqg::Weight& nu) {
  cqg::Word base;
  for (std::size_t i = 0; i < nu.size(); ++i) base += cqg::Word(static_cast<std::size_t>(nu[i]), static_cast<char>(i));
  cqg::FreeElement x;
  for (int k = uniform(rng, 1, 3); k > 0; --k) {
    cqg::Word w = base;
    std::shuffle(w.begin(), w.end(), rng);
    x.add(w, laurent_scalar(rng));
  }
  return x;
}

}  // namespace gen
