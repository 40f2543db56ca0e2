#include "symres/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "symres/errors.hpp"

namespace symres {

namespace {

CScalar ipow(CScalar base, int e) {
  CScalar acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Polynomial from_map(const std::map<std::vector<int>, CScalar>& terms) {
  Polynomial out;
  for (const auto& [exponents, coeff] : terms) {
    if (coeff == CScalar(0.0, 0.0)) continue;
    out.monomials.push_back(Monomial{exponents, coeff});
  }
  return out;
}

}  // namespace

CScalar poly_eval(const Polynomial& p, const ComplexVec& lambda) {
  CScalar acc = 0.0;
  for (const Monomial& mono : p.monomials) {
    CScalar term = mono.coeff;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      term *= ipow(lambda[i], mono.exponents[i]);
    }
    acc += term;
  }
  return acc;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  std::map<std::vector<int>, CScalar> merged;
  for (const Monomial& mono : a.monomials) merged[mono.exponents] += mono.coeff;
  for (const Monomial& mono : b.monomials) merged[mono.exponents] += mono.coeff;
  return from_map(merged);
}

Polynomial poly_scale(const Polynomial& p, CScalar factor) {
  Polynomial out = p;
  for (Monomial& mono : out.monomials) mono.coeff *= factor;
  return out;
}

Polynomial poly_compose_linear(const Polynomial& p,
                               const std::vector<double>& mat, int rank) {
  std::map<std::vector<int>, CScalar> result;
  const std::vector<int> zero(static_cast<std::size_t>(rank), 0);
  for (const Monomial& mono : p.monomials) {
    // Expand coeff * prod_i (sum_j M[i][j] lambda_j)^{e_i}.
    std::map<std::vector<int>, CScalar> partial;
    partial[zero] = mono.coeff;
    for (int i = 0; i < rank; ++i) {
      for (int rep = 0; rep < mono.exponents[static_cast<std::size_t>(i)];
           ++rep) {
        std::map<std::vector<int>, CScalar> next;
        for (const auto& [exponents, coeff] : partial) {
          for (int j = 0; j < rank; ++j) {
            const double mij = mat[static_cast<std::size_t>(i) * rank + j];
            if (mij == 0.0) continue;
            std::vector<int> bumped = exponents;
            ++bumped[static_cast<std::size_t>(j)];
            next[bumped] += coeff * mij;
          }
        }
        partial.swap(next);
      }
    }
    for (const auto& [exponents, coeff] : partial) {
      result[exponents] += coeff;
    }
  }
  return from_map(result);
}

int poly_degree(const Polynomial& p) {
  int degree = 0;
  for (const Monomial& mono : p.monomials) {
    int total = 0;
    for (int e : mono.exponents) total += e;
    degree = std::max(degree, total);
  }
  return degree;
}

double poly_coeff_l1(const Polynomial& p) {
  double sum = 0.0;
  for (const Monomial& mono : p.monomials) sum += std::abs(mono.coeff);
  return sum;
}

void validate_profile(const SpectralProfile& profile) {
  if (profile.rank < 1) {
    raise(ErrorCode::InvalidSpec, "profile rank must be positive");
  }
  for (const ProfileTerm& term : profile.terms) {
    if (!(term.width > 0.0)) {
      raise(ErrorCode::InvalidSpec, "profile widths must be positive");
    }
    for (const Monomial& mono : term.poly.monomials) {
      if (mono.exponents.size() != static_cast<std::size_t>(profile.rank)) {
        raise(ErrorCode::InvalidSpec,
              "monomial exponent tuples must have one entry per coordinate");
      }
      for (int e : mono.exponents) {
        if (e < 0) {
          raise(ErrorCode::InvalidSpec, "monomial exponents must be >= 0");
        }
      }
    }
  }
}

CScalar profile_eval(const SpectralProfile& profile, const ComplexVec& lambda) {
  CScalar acc = 0.0;
  for (const ProfileTerm& term : profile.terms) {
    acc += poly_eval(term.poly, lambda) *
           std::exp(-term.width * holomorphic_form(lambda));
  }
  return acc;
}

SpectralProfile symmetrize(const SpectralProfile& profile, const WeylGroup& w) {
  validate_profile(profile);
  SpectralProfile out;
  out.rank = profile.rank;
  out.symmetrized = true;
  const CScalar inv_order = 1.0 / static_cast<double>(w.elements.size());
  for (const ProfileTerm& term : profile.terms) {
    Polynomial averaged;
    for (const auto& element : w.elements) {
      averaged = poly_add(averaged,
                          poly_compose_linear(term.poly, element, w.rank));
    }
    out.terms.push_back(ProfileTerm{poly_scale(averaged, inv_order),
                                    term.width});
  }
  return out;
}

SpectralProfile gaussian_profile(int rank, double width) {
  SpectralProfile profile;
  profile.rank = rank;
  profile.symmetrized = true;  // radial, hence invariant under any W
  Polynomial one;
  one.monomials.push_back(
      Monomial{std::vector<int>(static_cast<std::size_t>(rank), 0), 1.0});
  profile.terms.push_back(ProfileTerm{one, width});
  return profile;
}

double min_width(const SpectralProfile& profile) {
  double width = std::numeric_limits<double>::infinity();
  for (const ProfileTerm& term : profile.terms) {
    width = std::min(width, term.width);
  }
  return std::isfinite(width) ? width : 1.0;
}

int max_degree(const SpectralProfile& profile) {
  int degree = 0;
  for (const ProfileTerm& term : profile.terms) {
    degree = std::max(degree, poly_degree(term.poly));
  }
  return degree;
}

double coeff_l1(const SpectralProfile& profile) {
  double sum = 0.0;
  for (const ProfileTerm& term : profile.terms) {
    sum += poly_coeff_l1(term.poly);
  }
  return sum;
}

}  // namespace symres
