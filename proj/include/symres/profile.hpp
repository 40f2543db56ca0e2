#pragma once

#include <vector>

#include "symres/rootspace.hpp"
#include "symres/types.hpp"

namespace symres {

struct Monomial {
  std::vector<int> exponents;  ///< one exponent per coordinate
  CScalar coeff;
};

/// Multivariate polynomial as a flat monomial list (kept deduplicated).
struct Polynomial {
  std::vector<Monomial> monomials;
};

CScalar poly_eval(const Polynomial& p, const ComplexVec& lambda);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& p, CScalar factor);
/// p(M lambda) expanded back into monomials (M row-major rank x rank).
Polynomial poly_compose_linear(const Polynomial& p,
                               const std::vector<double>& mat, int rank);
int poly_degree(const Polynomial& p);
double poly_coeff_l1(const Polynomial& p);

/// One profile term poly(lambda) * exp(-width * <lambda, lambda>) with the
/// holomorphic (non-conjugated) quadratic form in the exponent, so every
/// profile is entire and rapidly decaying on the real subspace.
struct ProfileTerm {
  Polynomial poly;
  double width = 1.0;  ///< > 0
};

struct SpectralProfile {
  int rank = 0;
  std::vector<ProfileTerm> terms;
  bool symmetrized = false;
};

/// Raises InvalidSpec on nonpositive widths or exponent-dimension mismatch.
void validate_profile(const SpectralProfile& profile);

CScalar profile_eval(const SpectralProfile& profile, const ComplexVec& lambda);

/// Group average |W|^{-1} sum_s V(s lambda), expanded term by term; the
/// widths are untouched because the group is orthogonal. Idempotent.
SpectralProfile symmetrize(const SpectralProfile& profile, const WeylGroup& w);

/// V(lambda) = exp(-width * <lambda, lambda>).
SpectralProfile gaussian_profile(int rank, double width = 1.0);

/// Slowest Gaussian width among the terms (controls decay envelopes).
double min_width(const SpectralProfile& profile);
int max_degree(const SpectralProfile& profile);
double coeff_l1(const SpectralProfile& profile);

}  // namespace symres
