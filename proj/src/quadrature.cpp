#include "symres/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "symres/errors.hpp"

namespace symres {

namespace {

// Gauss-Kronrod (7,15) abscissae on [0,1] side of [-1,1] (descending) and
// weights; odd-indexed abscissae together with the center form the embedded
// 7-point Gauss rule.
constexpr int kKronrodHalf = 7;  // positive abscissae, center excluded
constexpr double kXgk[8] = {
    0.9914553711208126392069, 0.9491079123427585245262,
    0.8648644233597690727897, 0.7415311855993944398639,
    0.5860872354676911302941, 0.4058451513773971669066,
    0.2077849550078984676007, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496373, 0.0630920926299785532907,
    0.1047900103222501838399,  0.1406532597155259187452,
    0.1690047266392679028266,  0.1903505780647854099133,
    0.2044329400752988924142,  0.209482141084727828013};
constexpr double kWg[4] = {
    0.1294849661688696932706, 0.2797053914892766679015,
    0.3818300505051189449504, 0.4179591836734693877551};

struct SegmentEval {
  CScalar kronrod;
  double error;  // |K15 - G7| * path length factor
  bool finite;
};

SegmentEval eval_gk15(const CIntegrand& fn, CScalar a, CScalar b) {
  const CScalar center = 0.5 * (a + b);
  const CScalar half = 0.5 * (b - a);
  CScalar k15 = 0.0;
  CScalar g7 = 0.0;
  bool finite = true;
  auto sample = [&](CScalar x) {
    CScalar v = fn(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) finite = false;
    return v;
  };
  for (int i = 0; i < kKronrodHalf; ++i) {
    const CScalar fp = sample(center + half * kXgk[i]);
    const CScalar fm = sample(center - half * kXgk[i]);
    k15 += kWgk[i] * (fp + fm);
    if (i % 2 == 1) g7 += kWg[(i - 1) / 2] * (fp + fm);
  }
  const CScalar fc = sample(center);
  k15 += kWgk[7] * fc;
  g7 += kWg[3] * fc;
  k15 *= half;
  g7 *= half;
  return {k15, std::abs(k15 - g7), finite};
}

QuadratureResult integrate_recursive(const CIntegrand& fn, CScalar a,
                                     CScalar b, double budget, int depth,
                                     int max_depth) {
  const SegmentEval seg = eval_gk15(fn, a, b);
  if (seg.finite &&
      (seg.error <= budget || seg.error <= 5e-16 * std::abs(seg.kronrod))) {
    return {seg.kronrod, seg.error};
  }
  if (depth >= max_depth) {
    raise(ErrorCode::NoConvergence,
          "adaptive quadrature exhausted depth " + std::to_string(max_depth) +
              " (pole on or near the path?)");
  }
  const CScalar mid = 0.5 * (a + b);
  const QuadratureResult left =
      integrate_recursive(fn, a, mid, 0.5 * budget, depth + 1, max_depth);
  const QuadratureResult right =
      integrate_recursive(fn, mid, b, 0.5 * budget, depth + 1, max_depth);
  return {left.value + right.value,
          left.error_estimate + right.error_estimate};
}

}  // namespace

QuadratureResult integrate_segment(const CIntegrand& fn, CScalar a, CScalar b,
                                   double tol, int max_depth) {
  if (tol <= 0.0) raise(ErrorCode::InvalidSpec, "quadrature tol must be > 0");
  if (a == b) return {CScalar(0.0), 0.0};
  return integrate_recursive(fn, a, b, tol, 0, max_depth);
}

QuadratureResult integrate_polyline(const CIntegrand& fn,
                                    const std::vector<CScalar>& vertices,
                                    double tol, int max_depth) {
  if (vertices.size() < 2) {
    raise(ErrorCode::InvalidSpec, "polyline needs at least two vertices");
  }
  // Split the budget by arc length so long straight runs get most of it.
  double total_len = 0.0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    total_len += std::abs(vertices[i + 1] - vertices[i]);
  }
  if (total_len == 0.0) return {CScalar(0.0), 0.0};
  QuadratureResult acc{CScalar(0.0), 0.0};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const double len = std::abs(vertices[i + 1] - vertices[i]);
    if (len == 0.0) continue;
    const double budget = tol * (len / total_len);
    const QuadratureResult part =
        integrate_segment(fn, vertices[i], vertices[i + 1], budget, max_depth);
    acc.value += part.value;
    acc.error_estimate += part.error_estimate;
  }
  return acc;
}

QuadratureResult circle_mean(const CIntegrand& fn, CScalar center,
                             double radius, double tol) {
  if (radius <= 0.0) raise(ErrorCode::InvalidSpec, "circle radius must be > 0");
  auto trapezoid = [&](int n) {
    CScalar sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const double theta = 2.0 * M_PI * k / n;
      const CScalar dir(std::cos(theta), std::sin(theta));
      sum += fn(center + radius * dir) * dir;
    }
    // (1/2*pi*i) * integral of fn dz with dz = i*r*e^{i t} dt cancels to a
    // plain average of fn * r * e^{i t}.
    return sum * (radius / static_cast<double>(n));
  };
  CScalar prev = trapezoid(32);
  for (int n = 64; n <= 4096; n *= 2) {
    const CScalar cur = trapezoid(n);
    const double change = std::abs(cur - prev);
    if (change <= std::max(tol, 1e-14 * std::abs(cur))) {
      return {cur, change};
    }
    prev = cur;
  }
  raise(ErrorCode::NoConvergence,
        "circle quadrature did not settle (pole on the circle?)");
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

}  // namespace symres
