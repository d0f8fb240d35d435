#include "nacent/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace nacent {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b (b nonzero, trimmed). Quotient optional.
Poly poly_divmod(Poly a, const Poly& b, std::uint32_t p, Poly* quotient = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    if (quotient) (*quotient)[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  if (quotient) trim(*quotient);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower as_prime_power(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {};
  return {p, m};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  const std::size_t deg = monic.size() - 1;
  if (deg <= 1) return deg == 1;
  Poly f(monic.begin(), monic.end());
  // Every monic divisor candidate of degree d is enumerated as the base-p
  // digits of a counter over its lower d coefficients.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_divmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be at least 1");
  size_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size_ *= p;
    if (size_ > kMaxSize)
      throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
  }
  if (m == 1) {
    modulus_ = {0, 1};
    return;
  }
  // Lex-least with the constant term most significant: counter digit i is
  // coefficient (m - 1 - i), so incrementing the counter walks that order.
  for (std::uint64_t c = 0; c < size_; ++c) {
    Poly f(m + 1, 0);
    std::uint64_t rest = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[m - 1 - i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(p, f)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElement Field::zero() const { return FieldElement{std::vector<std::uint32_t>(m_, 0)}; }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::uint64_t c) const {
  FieldElement e = zero();
  e.coeffs[0] = static_cast<std::uint32_t>(c % p_);
  return e;
}

FieldElement Field::from_code(std::uint64_t code) const {
  if (code >= size_) throw std::out_of_range("field element code out of range");
  FieldElement e = zero();
  for (std::uint32_t i = 0; i < m_; ++i) {
    e.coeffs[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return e;
}

std::uint64_t Field::code(const FieldElement& a) const {
  check(a);
  std::uint64_t c = 0;
  for (std::uint32_t i = m_; i-- > 0;) c = c * p_ + a.coeffs[i];
  return c;
}

void Field::check(const FieldElement& a) const {
  if (a.coeffs.size() != m_)
    throw std::invalid_argument("field element has " + std::to_string(a.coeffs.size()) +
                                " coefficients, field degree is " + std::to_string(m_));
  for (auto c : a.coeffs)
    if (c >= p_) throw std::invalid_argument("field element coefficient not reduced mod p");
}

bool Field::is_zero(const FieldElement& a) const {
  check(a);
  for (auto c : a.coeffs)
    if (c != 0) return false;
  return true;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < m_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < m_; ++i) r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  Poly r = poly_divmod(poly_mul(a.coeffs, b.coeffs, p_), modulus_, p_);
  r.resize(m_, 0);
  return FieldElement{std::move(r)};
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero field element");
  // Invariant: s * a == r (mod modulus) for both rows.
  Poly r0 = modulus_, r1 = a.coeffs;
  trim(r1);
  Poly s0, s1 = {1};
  while (!r1.empty()) {
    Poly q;
    Poly rem = poly_divmod(r0, r1, p_, &q);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint32_t scale = inv_mod(r0[0], p_);
  Poly res = poly_divmod(s0, modulus_, p_);
  res.resize(m_, 0);
  for (auto& c : res) c = static_cast<std::uint32_t>(std::uint64_t{c} * scale % p_);
  return FieldElement{std::move(res)};
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldElement Field::frobenius(const FieldElement& a) const {
  if (m_ % 2 != 0) throw std::domain_error("frobenius conjugation needs an even-degree field");
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < m_ / 2; ++i) e *= p_;
  return pow(a, e);
}

FieldTable::FieldTable(const Field& field)
    : q_(static_cast<std::uint32_t>(field.size())), p_(field.characteristic()) {
  if (field.size() > kMaxSize) throw std::invalid_argument("field too large for dense tables");
  std::vector<FieldElement> elems;
  elems.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) elems.push_back(field.from_code(c));
  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint32_t>(field.code(field.neg(elems[a])));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint32_t>(field.code(field.add(elems[a], elems[b])));
      mul_[a * q_ + b] = static_cast<std::uint32_t>(field.code(field.mul(elems[a], elems[b])));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;
  if (field.degree() % 2 == 0) {
    conj_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      conj_[a] = static_cast<std::uint32_t>(field.code(field.frobenius(elems[a])));
  }
}

}  // namespace nacent
