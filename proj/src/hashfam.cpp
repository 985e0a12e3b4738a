#include "dicut/hashfam.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "dicut/error.hpp"
#include "dicut/rng.hpp"

namespace dicut {

namespace {

using Poly = unsigned __int128;

int poly_degree(Poly p) {
  const auto hi = static_cast<std::uint64_t>(p >> 64);
  if (hi) return 127 - std::countl_zero(hi);
  const auto lo = static_cast<std::uint64_t>(p);
  return lo ? 63 - std::countl_zero(lo) : -1;
}

Poly poly_mod(Poly a, Poly b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, int degree, std::uint64_t low, std::uint64_t mask) {
  std::uint64_t r = 0;
  for (int i = degree - 1; i >= 0; --i) {
    const bool carry = (r >> (degree - 1)) & 1U;
    r = (r << 1) & mask;
    if (carry) r ^= low;
    if ((b >> i) & 1U) r ^= a;
  }
  return r;
}

std::uint64_t mask_for(int degree) { return degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1; }

std::uint64_t find_modulus(int degree) {
  if (degree == 1) return 1;
  for (int a = 1; a < degree; ++a) {
    const std::uint64_t low = (std::uint64_t{1} << a) | 1U;
    if (is_irreducible(degree, low)) return low;
  }
  for (int a = 3; a < degree; ++a)
    for (int b = 2; b < a; ++b)
      for (int c = 1; c < b; ++c) {
        const std::uint64_t low = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) | (std::uint64_t{1} << c) | 1U;
        if (is_irreducible(degree, low)) return low;
      }
  throw InvalidArgument("no irreducible trinomial or pentanomial of degree " + std::to_string(degree));
}

}  // namespace

bool is_irreducible(int degree, std::uint64_t low) {
  if (degree < 1 || degree > 64) return false;
  if (degree == 1) return low <= 1;
  if (degree < 64 && (low >> degree) != 0) return false;
  if ((low & 1U) == 0) return false;  // divisible by x
  const std::uint64_t mask = mask_for(degree);
  const Poly f = (Poly{1} << degree) | low;
  // powers[i] = x^(2^i) mod f
  std::vector<std::uint64_t> powers{2};
  for (int i = 1; i <= degree; ++i) powers.push_back(mulmod(powers.back(), powers.back(), degree, low, mask));
  if (powers[degree] != 2) return false;
  int rest = degree;
  for (int q = 2; q <= rest; ++q) {
    if (rest % q) continue;
    while (rest % q == 0) rest /= q;
    if (poly_degree(poly_gcd(f, Poly{powers[degree / q] ^ 2U})) != 0) return false;
  }
  return true;
}

BinaryField::BinaryField(int degree) : degree_(degree) {
  if (degree < 1 || degree > 64) throw InvalidArgument("field degree must lie in 1..64");
  modulus_low_ = find_modulus(degree);
  mask_ = mask_for(degree);
}

std::uint64_t BinaryField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  if (degree_ == 1) return a & b & 1U;
  return mulmod(a, b, degree_, modulus_low_, mask_);
}

int field_degree_for(std::uint64_t n, std::uint64_t m) noexcept {
  const std::uint64_t top = std::max({n, m, std::uint64_t{2}});
  return std::bit_width(top - 1);
}

KWiseHash::KWiseHash(int independence, std::uint64_t domain, std::uint64_t range,
                     std::vector<std::uint64_t> coefficients)
    : field_(field_degree_for(domain, range)), domain_(domain), range_(range),
      out_bits_(std::countr_zero(range)), coefficients_(std::move(coefficients)) {
  if (independence < 1) throw InvalidArgument("independence must be at least 1");
  if (domain < 1) throw InvalidArgument("hash domain must be non-empty");
  if (!std::has_single_bit(range)) throw InvalidArgument("hash range must be a power of two");
  if (static_cast<int>(coefficients_.size()) != independence)
    throw InvalidArgument("need exactly one coefficient per degree of independence");
  for (auto c : coefficients_)
    if (c & ~field_.mask()) throw InvalidArgument("hash coefficient outside the field");
}

std::uint64_t KWiseHash::operator()(std::uint64_t x) const {
  if (x < 1 || x > domain_) throw InvalidArgument("hash input " + std::to_string(x) + " outside [1, n]");
  const std::uint64_t point = x - 1;
  std::uint64_t v = coefficients_.back();
  for (std::size_t i = coefficients_.size() - 1; i-- > 0;) v = field_.mul(v, point) ^ coefficients_[i];
  const std::uint64_t keep = out_bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << out_bits_) - 1;
  return (v & keep) + 1;
}

KWiseHash sample_hash(int k, std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  if (k < 1) throw InvalidArgument("independence must be at least 1");
  if (n < 1) throw InvalidArgument("hash domain must be non-empty");
  if (!std::has_single_bit(m)) throw InvalidArgument("hash range must be a power of two");
  const std::uint64_t mask = mask_for(field_degree_for(n, m));
  Rng rng(seed);
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(k));
  for (auto& c : coeffs) c = rng() & mask;
  return KWiseHash(k, n, m, std::move(coeffs));
}

std::uint64_t next_power_of_two(double x) {
  if (!(x >= 1.0) || !std::isfinite(x)) throw InvalidArgument("next_power_of_two needs a finite x >= 1");
  if (x > 0x1.0p63) throw InvalidArgument("next_power_of_two: value exceeds 2^63");
  std::uint64_t p = 1;
  while (static_cast<double>(p) < x) p <<= 1;
  return p;
}

}  // namespace dicut
