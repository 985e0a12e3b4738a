#pragma once

#include <cstdint>
#include <vector>

namespace dicut {

/// Arithmetic in GF(2^degree) modulo a fixed irreducible polynomial.
/// Elements are the low `degree` bits of a uint64.
class BinaryField {
 public:
  /// 1 <= degree <= 64. The modulus is the lexicographically smallest
  /// irreducible polynomial of that degree with the fewest terms (a trinomial
  /// when one exists, else a pentanomial), found at construction.
  explicit BinaryField(int degree);

  int degree() const noexcept { return degree_; }
  /// Low 64 bits of the modulus; the x^degree term is implicit.
  std::uint64_t modulus_low() const noexcept { return modulus_low_; }
  std::uint64_t mask() const noexcept { return mask_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;

  bool operator==(const BinaryField& o) const noexcept {
    return degree_ == o.degree_ && modulus_low_ == o.modulus_low_;
  }

 private:
  int degree_;
  std::uint64_t modulus_low_;
  std::uint64_t mask_;
};

/// Rabin's irreducibility test for x^degree + low over GF(2).
bool is_irreducible(int degree, std::uint64_t low);

/// A member of the k-wise independent family [n] -> [m], m a power of two:
/// a uniformly random polynomial of degree < k over GF(2^b) with
/// 2^b >= max(n, m), evaluated at x - 1 and truncated to log2(m) bits.
class KWiseHash {
 public:
  KWiseHash(int independence, std::uint64_t domain, std::uint64_t range,
            std::vector<std::uint64_t> coefficients);

  int independence() const noexcept { return static_cast<int>(coefficients_.size()); }
  std::uint64_t domain() const noexcept { return domain_; }
  std::uint64_t range() const noexcept { return range_; }
  int field_degree() const noexcept { return field_.degree(); }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return coefficients_; }

  /// Bucket in 1..m. Throws InvalidArgument unless 1 <= x <= n.
  std::uint64_t operator()(std::uint64_t x) const;

  /// Random bits consumed to sample this function: k * field degree.
  std::uint64_t seed_bits() const noexcept {
    return static_cast<std::uint64_t>(coefficients_.size()) * static_cast<std::uint64_t>(field_.degree());
  }

 private:
  BinaryField field_;
  std::uint64_t domain_;
  std::uint64_t range_;
  int out_bits_;
  std::vector<std::uint64_t> coefficients_;
};

/// Field degree used for domain n and range m: ceil(log2(max(n, m))), at least 1.
int field_degree_for(std::uint64_t n, std::uint64_t m) noexcept;

/// Draws a function from the k-wise independent family. Throws
/// InvalidArgument unless m is a power of two, k >= 1 and n >= 1.
KWiseHash sample_hash(int k, std::uint64_t n, std::uint64_t m, std::uint64_t seed);

/// Smallest power of two >= x (x >= 1).
std::uint64_t next_power_of_two(double x);

}  // namespace dicut
