#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symres/types.hpp"

namespace symres {

/// One indecomposable positive restricted root with its multiplicities. The
/// coordinates are orthonormal for the invariant metric, so inner-product
/// ratios computed with the plain Euclidean dot product are the meaningful
/// ones factor by factor.
struct RestrictedRoot {
  RealVec vector;  ///< nonzero, length == rank
  int m = 1;       ///< multiplicity of alpha (positive)
  int m2 = 0;      ///< multiplicity of 2*alpha (nonnegative; 0 when m is odd)
};

struct SymmetricSpaceSpec {
  std::string name;
  int rank = 0;
  std::vector<RestrictedRoot> roots;
  /// Irreducible-factor index per root; roots in distinct factors must be
  /// orthogonal.
  std::vector<int> factor_partition;
};

enum class Parity { Odd, Even };

struct SpaceInvariants {
  RealVec rho;           ///< (1/2) sum (m + 2 m2) alpha
  double rho_norm_sq;    ///< bottom of the spectrum
  double branch_radius;  ///< min over roots of |alpha| * j(m)
  Parity parity;         ///< rank mod 2
  bool entire_density;   ///< every m and m2 even => polynomial density
};

/// Finite reflection group on the rank-dimensional space; elements stored as
/// row-major rank x rank orthogonal matrices.
struct WeylGroup {
  int rank = 0;
  std::vector<std::vector<double>> elements;
};

RealVec apply_matrix(const std::vector<double>& mat, int rank,
                     const RealVec& v);

/// Multiplicity factor in the branch radius: j(x) = x/2 for odd x,
/// x/2 + 1 for even x.
double j_factor(int m);

/// Structural validation; raises InvalidSpec with a description on failure.
void validate_spec(const SymmetricSpaceSpec& space);

std::vector<std::string> catalog_names();

/// Built-in spaces: H2..H6 (rank 1, |alpha| = 1, m = n-1), CH2 (rank 1,
/// m = 2, m2 = 1), SL3R / SL3C (A2 roots with |alpha|^2 = 2, m = 1 / 2),
/// SL4R (rank 3, A3 roots with |alpha|^2 = 2, m = 1). Raises UnknownSpace.
SymmetricSpaceSpec catalog_get(const std::string& name);

RealVec rho(const SymmetricSpaceSpec& space);
double branch_radius(const SymmetricSpaceSpec& space);

struct SurfaceKind {
  Parity parity;
  bool entire;
};
SurfaceKind surface_kind(const SymmetricSpaceSpec& space);

SpaceInvariants invariants(const SymmetricSpaceSpec& space);

/// Closure of the root reflections under composition. Raises ClosureOverflow
/// beyond `closure_bound` elements (default covers Weyl groups through A6).
WeylGroup weyl_generate(const SymmetricSpaceSpec& space,
                        std::size_t closure_bound = 10080);

}  // namespace symres
