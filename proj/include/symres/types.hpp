#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace symres {

using CScalar = std::complex<double>;
using RealVec = std::vector<double>;
using ComplexVec = std::vector<CScalar>;

inline double dot(const RealVec& a, const RealVec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const RealVec& a) { return dot(a, a); }

/// Euclidean pairing of a complex vector with a real one (no conjugation).
inline CScalar dot(const ComplexVec& a, const RealVec& b) {
  CScalar s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Holomorphic quadratic form sum_i z_i^2 (no conjugation); this is what
/// makes Gaussian profiles entire rather than merely decaying.
inline CScalar holomorphic_form(const ComplexVec& a) {
  CScalar s = 0.0;
  for (const CScalar& z : a) s += z * z;
  return s;
}

/// xi * direction as a complex vector.
inline ComplexVec scale(CScalar xi, const RealVec& direction) {
  ComplexVec out(direction.size());
  for (std::size_t i = 0; i < direction.size(); ++i) out[i] = xi * direction[i];
  return out;
}

inline RealVec scaled(double t, const RealVec& v) {
  RealVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

inline RealVec add(const RealVec& a, const RealVec& b) {
  RealVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline ComplexVec negate(const ComplexVec& a) {
  ComplexVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

}  // namespace symres
