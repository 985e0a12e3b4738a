#include <doctest.h>

#include <bit>
#include <cmath>
#include <map>

#include "dicut/error.hpp"
#include "dicut/harness.hpp"
#include "dicut/hashfam.hpp"
#include "dicut/rng.hpp"

using namespace dicut;

namespace {

// Polynomials over GF(2) as bit masks; plain carry-less arithmetic.
unsigned poly_degree(std::uint64_t p) { return 63U - static_cast<unsigned>(std::countl_zero(p)); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

bool irreducible_by_trial_division(int degree, std::uint64_t low) {
  const std::uint64_t p = (1ULL << degree) | low;
  for (std::uint64_t d = 2; d < (1ULL << (degree / 2 + 1)); ++d)
    if (poly_mod(p, d) == 0) return false;
  return true;
}

std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, const BinaryField& f) {
  const std::uint64_t modulus = (1ULL << f.degree()) | f.modulus_low();
  std::uint64_t acc = 0;
  for (int i = f.degree() - 1; i >= 0; --i) {
    acc <<= 1;
    if (acc >> f.degree() & 1U) acc ^= modulus;
    if (b >> i & 1U) acc ^= a;
  }
  return acc;
}

}  // namespace

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(2, 0b11));
  CHECK_FALSE(is_irreducible(2, 0b01));
  CHECK(is_irreducible(4, 0b0011));
  CHECK_FALSE(is_irreducible(4, 0b0101));
  CHECK(is_irreducible(8, 0x1B));
  for (int d = 2; d <= 12; ++d)
    for (std::uint64_t low = 1; low < (1ULL << d); low += 2) CHECK(is_irreducible(d, low) == irreducible_by_trial_division(d, low));
}

TEST_CASE("field modulus is irreducible for every degree") {
  for (int d = 1; d <= 64; ++d) {
    const BinaryField f(d);
    CHECK(is_irreducible(d, f.modulus_low()));
    if (d <= 20) CHECK(irreducible_by_trial_division(d, f.modulus_low()));
  }
}

TEST_CASE("field multiplication") {
  Rng rng(51);
  for (int d : {1, 3, 8, 13, 31, 40}) {
    const BinaryField f(d);
    for (int t = 0; t < 300; ++t) {
      const std::uint64_t a = rng() & f.mask(), b = rng() & f.mask(), c = rng() & f.mask();
      CHECK(f.mul(a, b) == slow_mul(a, b, f));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(a, 1) == a);
    }
  }
  const BinaryField f64(64);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t a = rng(), b = rng(), c = rng();
    CHECK(f64.mul(f64.mul(a, b), c) == f64.mul(a, f64.mul(b, c)));
    CHECK(f64.mul(a, f64.add(b, c)) == f64.add(f64.mul(a, b), f64.mul(a, c)));
  }
}

TEST_CASE("sampling and evaluation") {
  const auto one = sample_hash(4, 100, 1, 3);
  for (std::uint64_t x = 1; x <= 100; ++x) CHECK(one(x) == 1);

  const auto h = sample_hash(4, 1000, 64, 9);
  const auto g = sample_hash(4, 1000, 64, 9);
  for (std::uint64_t x = 1; x <= 1000; ++x) {
    CHECK(h(x) == g(x));
    CHECK(h(x) >= 1);
    CHECK(h(x) <= 64);
  }
  CHECK(h(17) == h(17));
  CHECK_THROWS_AS(h(0), InvalidArgument);
  CHECK_THROWS_AS(h(1001), InvalidArgument);
  CHECK_THROWS_AS(sample_hash(4, 10, 6, 1), InvalidArgument);
  CHECK_THROWS_AS(sample_hash(0, 10, 8, 1), InvalidArgument);
  CHECK_THROWS_AS(KWiseHash(2, 10, 8, {1}), InvalidArgument);
}

TEST_CASE("seed size") {
  // b = ceil(log2 max(n, m)) <= ceil(log2 n) + ceil(log2 m), so the seed is at
  // most k (ceil(log2 n) + ceil(log2 m)) bits.
  for (std::uint64_t n : {2ULL, 100ULL, 4096ULL, 1000000ULL})
    for (std::uint64_t m : {2ULL, 16ULL, 1ULL << 20}) {
      const auto h = sample_hash(4, n, m, 1);
      const auto ln = static_cast<std::uint64_t>(std::bit_width(n - 1));
      const auto lm = static_cast<std::uint64_t>(std::bit_width(m - 1));
      CHECK(h.seed_bits() <= 4 * (ln + lm));
      CHECK(h.field_degree() == field_degree_for(n, m));
    }
}

TEST_CASE("next power of two") {
  CHECK(next_power_of_two(1.0) == 1);
  CHECK(next_power_of_two(1.5) == 2);
  CHECK(next_power_of_two(8.0) == 8);
  CHECK(next_power_of_two(8.0001) == 16);
  CHECK_THROWS_AS(next_power_of_two(0.5), InvalidArgument);
}

TEST_CASE("exhaustive 4-wise independence over GF(8)") {
  // Every coefficient vector of a degree-3 polynomial over GF(8): the values at
  // four distinct points are a bijection of the coefficients.
  const std::vector<std::array<std::uint64_t, 4>> tuples = {{1, 2, 3, 4}, {8, 1, 5, 2}, {3, 7, 6, 1}};
  for (std::uint64_t m : {8ULL, 2ULL}) {
    for (const auto& pts : tuples) {
      std::map<std::array<std::uint64_t, 4>, int> counts;
      for (std::uint64_t c = 0; c < 4096; ++c) {
        const KWiseHash h(4, 8, m, {c & 7, c >> 3 & 7, c >> 6 & 7, c >> 9 & 7});
        ++counts[{h(pts[0]), h(pts[1]), h(pts[2]), h(pts[3])}];
      }
      const auto cells = static_cast<std::size_t>(m * m * m * m);
      CHECK(counts.size() == cells);
      for (const auto& [key, cnt] : counts) CHECK(cnt == static_cast<int>(4096 / cells));
    }
  }
}

TEST_CASE("two-bucket marginal frequency") {
  const int funcs = 10000;
  for (std::uint64_t x : {1ULL, 5ULL, 64ULL}) {
    int ones = 0;
    for (int f = 0; f < funcs; ++f) ones += sample_hash(4, 64, 2, derive_seed(5, {static_cast<std::uint64_t>(f)}))(x) == 1;
    const double sigma = std::sqrt(funcs * 0.25);
    CHECK(std::abs(ones - funcs / 2.0) <= 4 * sigma);
  }
}

TEST_CASE("chi-square suite") {
  const auto r = verify_lemma("hash", {});
  CHECK(r["pass"].get<bool>());
  CHECK(r["marginal"]["p_value"].get<double>() >= 1e-3);
  CHECK(r["joint"]["p_value"].get<double>() >= 1e-3);
}
