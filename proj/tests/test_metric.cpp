#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "crosscodes/metric.hpp"
#include "crosscodes/word.hpp"

using namespace crosscodes;

namespace {

// Reference sphere: scan the whole space for words at cross distance <= t.
std::vector<Word> sphere_by_scan(const Word& center, unsigned t) {
  const Modulus mod = center.modulus();
  const std::size_t n = center.size();
  const std::uint64_t total = std::uint64_t{1} << (n * mod.exponent());
  std::vector<Word> out;
  for (std::uint64_t p = 0; p < total; ++p) {
    const Word w = Word::unpack(p, mod, n);
    const ExtendedDistance d = cross_distance(center, w);
    if (d.is_finite() && d.value() <= t) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t lee_ball_by_scan(unsigned n, unsigned m, unsigned t) {
  const Modulus mod(m);
  const Word center = Word::zero(mod, n);
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  std::uint64_t count = 0;
  for (std::uint64_t p = 0; p < total; ++p)
    if (lee_distance(center, Word::unpack(p, mod, n)) <= t) ++count;
  return count;
}

}  // namespace

TEST_CASE("extended distance orders finite values below infinity") {
  const auto inf = ExtendedDistance::infinity();
  const auto three = ExtendedDistance::finite(3);
  CHECK(three < inf);
  CHECK(inf > three);
  CHECK(!(inf < inf));
  CHECK(inf == ExtendedDistance::infinity());
  CHECK(three <= 3);
  CHECK(three >= 3);
  CHECK(three.is_finite());
  CHECK_THROWS_AS(inf.value(), std::domain_error);
}

TEST_CASE("cross distance: zero, single-coordinate cycle distance, or infinite") {
  const Modulus m3(3);
  CHECK(cross_distance(Word(m3, {1, 2}), Word(m3, {1, 2})) == ExtendedDistance::finite(0));
  CHECK(cross_distance(Word(m3, {1, 2}), Word(m3, {7, 2})) == ExtendedDistance::finite(2));
  CHECK(cross_distance(Word(m3, {1, 2}), Word(m3, {1, 6})) == ExtendedDistance::finite(4));
  CHECK(cross_distance(Word(m3, {1, 2}), Word(m3, {2, 3})) == ExtendedDistance::infinity());
}

TEST_CASE("cross distance is finite exactly when the Hamming distance is <= 1") {
  const Modulus mod(3);
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      const Word x = Word::unpack(a, mod, 2), y = Word::unpack(b, mod, 2);
      CHECK(cross_distance(x, y).is_finite() == (hamming_distance(x, y) <= 1));
    }
}

TEST_CASE("cross distance is symmetric and separates points but skips the triangle inequality") {
  const Modulus mod(3);
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      const Word x = Word::unpack(a, mod, 2), y = Word::unpack(b, mod, 2);
      CHECK(cross_distance(x, y) == cross_distance(y, x));
      CHECK((cross_distance(x, y) == ExtendedDistance::finite(0)) == (x == y));
    }

  // d(x,z) = d(z,y) = 1 yet d(x,y) is infinite: no triangle inequality.
  const Word x(mod, {0, 0}), z(mod, {1, 0}), y(mod, {1, 1});
  CHECK(cross_distance(x, z) == ExtendedDistance::finite(1));
  CHECK(cross_distance(z, y) == ExtendedDistance::finite(1));
  CHECK(cross_distance(x, y) == ExtendedDistance::infinity());
}

TEST_CASE("cross sphere matches the full-space scan and its volume formula") {
  for (unsigned m = 3; m <= 4; ++m)
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned t = 0; t <= (1u << (m - 1)) - 1; ++t) {
        const Modulus mod(m);
        const Word center = Word::unpack(123456789 % (std::uint64_t{1} << (n * m)), mod, n);
        const std::vector<Word> sphere = cross_sphere(center, t);
        CHECK(sphere == sphere_by_scan(center, t));
        CHECK(sphere.size() == cross_sphere_volume(n, t));
        CHECK(std::is_sorted(sphere.begin(), sphere.end()));
      }
  CHECK(cross_sphere_volume(3, 2) == 13);
  CHECK(cross_sphere_volume(2, 3) == 13);
  CHECK(cross_sphere_volume(4, 2) == 17);
}

TEST_CASE("cross sphere rejects a radius reaching the antipode") {
  const Modulus m3(3);
  // t = 4 = 2^{m-1} would make +4 and -4 the same word.
  CHECK_THROWS_AS(cross_sphere(Word::zero(m3, 2), 4), std::invalid_argument);
  CHECK(cross_sphere(Word::zero(m3, 2), 0).size() == 1);
}

TEST_CASE("lee sphere volume formula agrees with the full-space scan") {
  for (unsigned m = 3; m <= 4; ++m)
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned t = 0; t <= (1u << (m - 1)) - 1; ++t)
        CHECK(lee_sphere_volume(n, t) == lee_ball_by_scan(n, m, t));
  CHECK(lee_sphere_volume(2, 2) == 13);
  CHECK(lee_sphere_volume(2, 3) == 25);
  CHECK(lee_sphere_volume(3, 3) == 63);
  CHECK(lee_sphere_volume(4, 2) == 41);
}

TEST_CASE("sphere packing bounds floor the space size over the sphere volume") {
  CHECK(sphere_packing_bound(2, 3, 2, Metric::lee) == 4);      // 64/13
  CHECK(sphere_packing_bound(2, 3, 2, Metric::cross) == 7);    // 64/9
  CHECK(sphere_packing_bound(2, 4, 3, Metric::lee) == 10);     // 256/25
  CHECK(sphere_packing_bound(3, 5, 3, Metric::cross) == 1724); // 32768/19
  CHECK(sphere_packing_bound(4, 5, 2, Metric::lee) == 25575);  // 2^20/41
  CHECK(sphere_packing_bound(2, 5, 3, Metric::cross) == 78);   // 2^10/13

  CHECK_THROWS_AS(sphere_packing_bound(99, 4, 2, Metric::lee), std::invalid_argument);
  CHECK_THROWS_AS(sphere_packing_bound(2, 3, 4, Metric::cross), std::invalid_argument);
}

TEST_CASE("linear bound is the largest power of two at most the plain bound") {
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned m = 3; m <= 5; ++m)
      for (unsigned t = 1; t <= 3; ++t)
        for (const Metric metric : {Metric::lee, Metric::cross}) {
          const std::uint64_t bound = sphere_packing_bound(n, m, t, metric);
          const std::uint64_t lin = linear_sphere_packing_bound(n, m, t, metric);
          CHECK((lin & (lin - 1)) == 0);
          CHECK(lin <= bound);
          CHECK(2 * lin > bound);
        }
  CHECK(linear_sphere_packing_bound(2, 5, 2, Metric::cross) == 64);
  CHECK(linear_sphere_packing_bound(4, 5, 2, Metric::lee) == 16384);
}

TEST_CASE("bound tables collect one row per modulus") {
  const auto rows = bound_table(3, 3, {3, 4, 5});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == BoundRow{8, 8, 26, 8, 16});
  CHECK(rows[1] == BoundRow{16, 65, 215, 64, 128});
  CHECK(rows[2] == BoundRow{32, 520, 1724, 512, 1024});
}

TEST_CASE("no perfect codes: the cross volume never divides the space size") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned m = 1; m <= 10; ++m)
      for (unsigned t = 1; t <= 15; ++t) {
        const PerfectCodeWitness w = perfect_code_impossible(n, m, t);
        CHECK(w.impossible());
        CHECK(w.sphere_volume == 2ull * n * t + 1);
        CHECK(w.sphere_volume % 2 == 1);
      }
}
