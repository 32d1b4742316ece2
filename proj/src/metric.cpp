#include "crosscodes/metric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "crosscodes/errors.hpp"

namespace crosscodes {

ExtendedDistance cross_distance(const Word& a, const Word& b) {
  require_same_shape(a, b);
  std::size_t differing = a.size();  // sentinel: none
  unsigned count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (++count > 1) return ExtendedDistance::infinity();
      differing = i;
    }
  }
  if (count == 0) return ExtendedDistance::finite(0);
  const Modulus mod = a.modulus();
  const std::uint32_t delta =
      mod.reduce(static_cast<std::int64_t>(a[differing]) - static_cast<std::int64_t>(b[differing]));
  return ExtendedDistance::finite(abs_val(delta, mod));
}

namespace {

void require_sphere_radius(Modulus mod, unsigned t) {
  // t = 2^{m-1} would make +t and -t the same coordinate change.
  if (t + std::uint64_t{1} > mod.size() / 2)
    throw ParameterError("sphere radius requires t <= 2^{m-1} - 1");
}

std::uint64_t checked_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Word> cross_sphere(const Word& center, unsigned t) {
  require_sphere_radius(center.modulus(), t);
  std::vector<Word> sphere;
  sphere.reserve(2 * center.size() * t + 1);
  sphere.push_back(center);
  for (std::size_t i = 0; i < center.size(); ++i) {
    for (unsigned a = 1; a <= t; ++a) {
      sphere.push_back(center.with_coord(i, static_cast<std::int64_t>(center[i]) + a));
      sphere.push_back(center.with_coord(i, static_cast<std::int64_t>(center[i]) - a));
    }
  }
  std::sort(sphere.begin(), sphere.end());
  sphere.erase(std::unique(sphere.begin(), sphere.end()), sphere.end());
  return sphere;
}

std::uint64_t cross_sphere_volume(unsigned n, unsigned t) {
  if (n == 0) throw ParameterError("requires n >= 1");
  return 2ull * n * t + 1;
}

std::uint64_t lee_sphere_volume(unsigned n, unsigned t) {
  if (n == 0) throw ParameterError("requires n >= 1");
  std::uint64_t vol = 0;
  const unsigned top = std::min(n, t);
  for (unsigned i = 0; i <= top; ++i)
    vol += (std::uint64_t{1} << i) * checked_binomial(n, i) * checked_binomial(t, i);
  return vol;
}

namespace {

std::uint64_t metric_volume(unsigned n, unsigned t, Metric metric) {
  return metric == Metric::cross ? cross_sphere_volume(n, t) : lee_sphere_volume(n, t);
}

void require_bound_params(unsigned n, unsigned m, unsigned t) {
  if (n == 0) throw ParameterError("requires n >= 1");
  if (t == 0) throw ParameterError("requires t >= 1");
  if (m == 0 || m > kMaxModulusBits)
    throw ParameterError("requires 1 <= m <= " + std::to_string(kMaxModulusBits));
  if (static_cast<std::uint64_t>(n) * m > 62)
    throw ParameterError("requires n*m <= 62");
  require_sphere_radius(Modulus(m), t);
}

}  // namespace

std::uint64_t sphere_packing_bound(unsigned n, unsigned m, unsigned t, Metric metric) {
  require_bound_params(n, m, t);
  const std::uint64_t space = std::uint64_t{1} << (static_cast<std::uint64_t>(n) * m);
  return space / metric_volume(n, t, metric);
}

std::uint64_t linear_sphere_packing_bound(unsigned n, unsigned m, unsigned t, Metric metric) {
  require_bound_params(n, m, t);
  const std::uint64_t space = std::uint64_t{1} << (static_cast<std::uint64_t>(n) * m);
  const std::uint64_t vol = metric_volume(n, t, metric);
  if (vol % 2 == 0 || vol <= 1)
    throw std::logic_error("sphere volume must be odd and > 1");
  // An odd volume > 1 never divides 2^{nm}, so 2^j <= floor(space/vol) is
  // already strict against the rational bound.
  std::uint64_t b = space / vol;
  if (b == 0) throw std::logic_error("sphere volume exceeds the space");
  std::uint64_t p = 1;
  while (p * 2 <= b) p *= 2;
  if (p * vol == space) throw std::logic_error("power of two met the rational bound");
  return p;
}

std::vector<BoundRow> bound_table(unsigned n, unsigned t, const std::vector<unsigned>& ms) {
  std::vector<BoundRow> rows;
  rows.reserve(ms.size());
  for (unsigned m : ms) {
    BoundRow r;
    r.q = std::uint64_t{1} << m;
    r.lee_bound = sphere_packing_bound(n, m, t, Metric::lee);
    r.cross_bound = sphere_packing_bound(n, m, t, Metric::cross);
    r.lee_linear_bound = linear_sphere_packing_bound(n, m, t, Metric::lee);
    r.cross_linear_bound = linear_sphere_packing_bound(n, m, t, Metric::cross);
    rows.push_back(r);
  }
  return rows;
}

PerfectCodeWitness perfect_code_impossible(unsigned n, unsigned m, unsigned t) {
  if (n == 0 || t == 0) throw ParameterError("requires n >= 1 and t >= 1");
  if (m == 0 || static_cast<std::uint64_t>(n) * m > 62)
    throw ParameterError("requires 1 <= m and n*m <= 62");
  PerfectCodeWitness w;
  w.sphere_volume = cross_sphere_volume(n, t);
  const std::uint64_t space = std::uint64_t{1} << (static_cast<std::uint64_t>(n) * m);
  w.volume_divides_space = (space % w.sphere_volume) == 0;
  return w;
}

}  // namespace crosscodes
