#include "symres/rootspace.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <utility>

#include "symres/errors.hpp"

namespace symres {

RealVec apply_matrix(const std::vector<double>& mat, int rank,
                     const RealVec& v) {
  RealVec out(static_cast<std::size_t>(rank), 0.0);
  for (int i = 0; i < rank; ++i) {
    double acc = 0.0;
    for (int j = 0; j < rank; ++j) {
      acc += mat[static_cast<std::size_t>(i) * rank + j] * v[j];
    }
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

double j_factor(int m) {
  return (m % 2 != 0) ? 0.5 * m : 0.5 * m + 1.0;
}

void validate_spec(const SymmetricSpaceSpec& space) {
  if (space.rank < 1) {
    raise(ErrorCode::InvalidSpec, "rank must be a positive integer");
  }
  if (space.roots.empty()) {
    raise(ErrorCode::InvalidSpec, "at least one restricted root is required");
  }
  if (space.factor_partition.size() != space.roots.size()) {
    raise(ErrorCode::InvalidSpec,
          "factor_partition must assign exactly one factor per root");
  }
  for (const RestrictedRoot& root : space.roots) {
    if (root.vector.size() != static_cast<std::size_t>(space.rank)) {
      raise(ErrorCode::InvalidSpec,
            "every root vector must have exactly `rank` coordinates");
    }
    if (norm_sq(root.vector) < 1e-24) {
      raise(ErrorCode::InvalidSpec, "root vectors must be nonzero");
    }
    if (root.m < 1) {
      raise(ErrorCode::InvalidSpec, "multiplicity m must be positive");
    }
    if (root.m2 < 0) {
      raise(ErrorCode::InvalidSpec, "multiplicity m2 must be nonnegative");
    }
    if (root.m % 2 != 0 && root.m2 != 0) {
      raise(ErrorCode::InvalidSpec, "odd m forces m2 = 0");
    }
  }
  for (int f : space.factor_partition) {
    if (f < 0) {
      raise(ErrorCode::InvalidSpec, "factor indices must be nonnegative");
    }
  }
  const std::size_t n = space.roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const RealVec& a = space.roots[i].vector;
      const RealVec& b = space.roots[j].vector;
      const double ab = dot(a, b);
      if (space.factor_partition[i] != space.factor_partition[j]) {
        const double scale =
            std::sqrt(norm_sq(a)) * std::sqrt(norm_sq(b));
        if (std::abs(ab) > 1e-12 * std::max(1.0, scale)) {
          raise(ErrorCode::InvalidSpec,
                "roots in distinct factors must be orthogonal");
        }
      } else {
        // Crystallographic condition: <a,b>/<b,b> must be a half-integer.
        const double ratio = 2.0 * ab / norm_sq(b);
        if (std::abs(ratio - std::round(ratio)) > 1e-9) {
          raise(ErrorCode::InvalidSpec,
                "inner-product ratios within a factor must be half-integers");
        }
      }
    }
  }
}

namespace {

SymmetricSpaceSpec make_rank1(const std::string& name, int m, int m2) {
  SymmetricSpaceSpec space;
  space.name = name;
  space.rank = 1;
  space.roots = {RestrictedRoot{{1.0}, m, m2}};
  space.factor_partition = {0};
  return space;
}

SymmetricSpaceSpec make_a2(const std::string& name, int m) {
  const double s2 = std::sqrt(2.0);
  const double s6 = std::sqrt(6.0);
  SymmetricSpaceSpec space;
  space.name = name;
  space.rank = 2;
  space.roots = {RestrictedRoot{{s2, 0.0}, m, 0},
                 RestrictedRoot{{-0.5 * s2, 0.5 * s6}, m, 0},
                 RestrictedRoot{{0.5 * s2, 0.5 * s6}, m, 0}};
  space.factor_partition = {0, 0, 0};
  return space;
}

SymmetricSpaceSpec make_sl4r() {
  SymmetricSpaceSpec space;
  space.name = "SL4R";
  space.rank = 3;
  space.roots = {RestrictedRoot{{1.0, -1.0, 0.0}, 1, 0},
                 RestrictedRoot{{1.0, 0.0, -1.0}, 1, 0},
                 RestrictedRoot{{0.0, 1.0, -1.0}, 1, 0},
                 RestrictedRoot{{1.0, 1.0, 0.0}, 1, 0},
                 RestrictedRoot{{1.0, 0.0, 1.0}, 1, 0},
                 RestrictedRoot{{0.0, 1.0, 1.0}, 1, 0}};
  space.factor_partition = {0, 0, 0, 0, 0, 0};
  return space;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"H2", "H3", "H4", "H5", "H6", "CH2", "SL3R", "SL3C", "SL4R"};
}

SymmetricSpaceSpec catalog_get(const std::string& name) {
  SymmetricSpaceSpec space;
  if (name == "H2") {
    space = make_rank1(name, 1, 0);
  } else if (name == "H3") {
    space = make_rank1(name, 2, 0);
  } else if (name == "H4") {
    space = make_rank1(name, 3, 0);
  } else if (name == "H5") {
    space = make_rank1(name, 4, 0);
  } else if (name == "H6") {
    space = make_rank1(name, 5, 0);
  } else if (name == "CH2") {
    space = make_rank1(name, 2, 1);
  } else if (name == "SL3R") {
    space = make_a2(name, 1);
  } else if (name == "SL3C") {
    space = make_a2(name, 2);
  } else if (name == "SL4R") {
    space = make_sl4r();
  } else {
    raise(ErrorCode::UnknownSpace, "no catalog entry named '" + name + "'");
  }
  validate_spec(space);
  return space;
}

RealVec rho(const SymmetricSpaceSpec& space) {
  RealVec r(static_cast<std::size_t>(space.rank), 0.0);
  for (const RestrictedRoot& root : space.roots) {
    const double weight = 0.5 * (root.m + 2.0 * root.m2);
    for (int i = 0; i < space.rank; ++i) {
      r[static_cast<std::size_t>(i)] +=
          weight * root.vector[static_cast<std::size_t>(i)];
    }
  }
  return r;
}

double branch_radius(const SymmetricSpaceSpec& space) {
  double best = std::numeric_limits<double>::infinity();
  for (const RestrictedRoot& root : space.roots) {
    const double candidate =
        std::sqrt(norm_sq(root.vector)) * j_factor(root.m);
    best = std::min(best, candidate);
  }
  return best;
}

SurfaceKind surface_kind(const SymmetricSpaceSpec& space) {
  SurfaceKind kind;
  kind.parity = (space.rank % 2 != 0) ? Parity::Odd : Parity::Even;
  kind.entire = true;
  for (const RestrictedRoot& root : space.roots) {
    if (root.m % 2 != 0 || root.m2 % 2 != 0) {
      kind.entire = false;
      break;
    }
  }
  return kind;
}

SpaceInvariants invariants(const SymmetricSpaceSpec& space) {
  validate_spec(space);
  SpaceInvariants inv;
  inv.rho = rho(space);
  inv.rho_norm_sq = norm_sq(inv.rho);
  inv.branch_radius = branch_radius(space);
  const SurfaceKind kind = surface_kind(space);
  inv.parity = kind.parity;
  inv.entire_density = kind.entire;
  return inv;
}

namespace {

bool matrices_close(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-9) return false;
  }
  return true;
}

std::vector<double> matmul(const std::vector<double>& a,
                           const std::vector<double>& b, int rank) {
  std::vector<double> c(static_cast<std::size_t>(rank) * rank, 0.0);
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < rank; ++k) {
      const double aik = a[static_cast<std::size_t>(i) * rank + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < rank; ++j) {
        c[static_cast<std::size_t>(i) * rank + j] +=
            aik * b[static_cast<std::size_t>(k) * rank + j];
      }
    }
  }
  return c;
}

}  // namespace

WeylGroup weyl_generate(const SymmetricSpaceSpec& space,
                        std::size_t closure_bound) {
  validate_spec(space);
  const int rank = space.rank;
  std::vector<std::vector<double>> generators;
  for (const RestrictedRoot& root : space.roots) {
    const double len_sq = norm_sq(root.vector);
    std::vector<double> s(static_cast<std::size_t>(rank) * rank, 0.0);
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        const double delta = (i == j) ? 1.0 : 0.0;
        s[static_cast<std::size_t>(i) * rank + j] =
            delta - 2.0 * root.vector[static_cast<std::size_t>(i)] *
                        root.vector[static_cast<std::size_t>(j)] / len_sq;
      }
    }
    generators.push_back(std::move(s));
  }

  WeylGroup group;
  group.rank = rank;
  std::vector<double> identity(static_cast<std::size_t>(rank) * rank, 0.0);
  for (int i = 0; i < rank; ++i) {
    identity[static_cast<std::size_t>(i) * rank + i] = 1.0;
  }

  std::deque<std::vector<double>> worklist;
  worklist.push_back(identity);
  while (!worklist.empty()) {
    std::vector<double> current = std::move(worklist.front());
    worklist.pop_front();
    bool known = false;
    for (const auto& g : group.elements) {
      if (matrices_close(g, current)) {
        known = true;
        break;
      }
    }
    if (known) continue;
    group.elements.push_back(current);
    if (group.elements.size() > closure_bound) {
      raise(ErrorCode::ClosureOverflow,
            "reflection closure exceeded " + std::to_string(closure_bound) +
                " elements; root data is likely not crystallographic");
    }
    for (const auto& s : generators) {
      worklist.push_back(matmul(current, s, rank));
    }
  }
  return group;
}

}  // namespace symres
