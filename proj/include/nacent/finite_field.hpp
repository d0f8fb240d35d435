#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nacent {

/// An element of GF(p^m): coefficients of a polynomial of degree < m,
/// lowest degree first, each reduced into [0, p).
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  bool operator==(const FieldElement&) const = default;
};

/// GF(p^m) realised as GF(p)[x] / (modulus).
///
/// The modulus is the lexicographically least monic irreducible polynomial of
/// degree m, comparing coefficient vectors from the constant term upwards. For
/// m = 1 it is the formal polynomial x and the arithmetic is integers mod p.
class Field {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  /// Throws std::invalid_argument for non-prime p, m < 1, or p^m > 2^20.
  Field(std::uint32_t p, std::uint32_t m);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t size() const { return size_; }
  /// Monic modulus, m + 1 coefficients, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::uint64_t c) const;
  /// Bijection onto [0, p^m): sum of coeffs[i] * p^i.
  FieldElement from_code(std::uint64_t code) const;
  std::uint64_t code(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Extended Euclid over GF(p)[x]. Throws std::domain_error on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  /// a -> a^(p^(m/2)). Throws std::domain_error when m is odd.
  FieldElement frobenius(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;
  /// Throws std::invalid_argument when a has the wrong length or an
  /// unreduced coefficient.
  void check(const FieldElement& a) const;

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
};

/// Dense add/mul/inverse/conjugation tables over element codes, for the small
/// fields the group constructors work in.
class FieldTable {
 public:
  static constexpr std::uint64_t kMaxSize = 1024;

  explicit FieldTable(const Field& field);

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// Zero has no inverse; inv(0) is 0 in the table and callers must not rely on it.
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// Only populated for even-degree fields.
  std::uint32_t conj(std::uint32_t a) const { return conj_[a]; }
  bool has_conjugation() const { return !conj_.empty(); }

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> conj_;
};

bool is_prime(std::uint64_t n);

/// Returns {p, m} with q = p^m, or {0, 0} when q is not a prime power.
struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
};
PrimePower as_prime_power(std::uint64_t q);

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree <= deg/2. Coefficients low degree first, monic.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace nacent
