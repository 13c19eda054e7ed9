#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gqm {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of GF(p^n), stored as its enumeration code
/// code = c0 + c1*p + ... + c(n-1)*p^(n-1), where c_i are the coefficients of
/// the polynomial representative (ascending degree). The code is therefore the
/// element's position in enumerate_elements().
///
/// Elements keep a non-owning pointer to their field; the FieldPtr returned by
/// Field::create must outlive them.
class FieldElement {
 public:
  const Field& field() const { return *field_; }
  std::uint32_t code() const { return code_; }
  std::vector<unsigned> coeffs() const;
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inv() const;
  FieldElement pow(long long k) const;

  /// Equality requires the same field (p, n) and the same coefficients.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Enumeration order; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  FieldElement(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  const Field* field_;
  std::uint32_t code_;
};

/// GF(q), q = p^n. Immutable after construction.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree n, comparing coefficient lists from the constant term upwards.
/// The generator is the first element in enumeration order whose
/// multiplicative order is q-1. Two fields with equal (p, n) are therefore
/// identical, and elements from either may be mixed freely.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

  static FieldPtr create(unsigned p, unsigned n);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  /// Monic, ascending degree, length n+1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement generator() const { return {this, exp_[1 % exp_.size()]}; }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coeffs(std::span<const unsigned> coeffs) const;
  /// The integer k as k copies of 1 (negative k allowed).
  FieldElement from_int(long long k) const;

  /// All q elements in ascending code order, zero first.
  std::vector<FieldElement> elements() const;

  /// Discrete log base generator(); requires a nonzero element.
  std::uint32_t log(const FieldElement& x) const;
  /// generator()^k for any integer k.
  FieldElement exp(long long k) const;

  bool same_as(const Field& other) const { return p_ == other.p_ && n_ == other.n_; }

  /// "x^2+x+1" style rendering of the modulus.
  std::string modulus_string() const;

 private:
  Field(unsigned p, unsigned n);
  friend class FieldElement;

  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_codes(std::uint32_t a, std::uint32_t b) const;
  void check_same(const Field& other) const;

  unsigned p_;
  unsigned n_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = code of generator^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[code], code != 0
};

bool is_prime(std::uint64_t n);

/// Splits q into (p, n) with q = p^n; returns false when q is not a prime power.
bool factor_prime_power(std::uint64_t q, unsigned& p, unsigned& n);

/// x or -x depending on sign (+1 / -1). In characteristic 2 both coincide,
/// which is how the minus signs of the bras and of the singlet disappear.
FieldElement signed_coefficient(int sign, const FieldElement& x);

/// "p^n:c0,c1,...,c(n-1)"
std::string to_string(const FieldElement& x);

/// Human form in terms of the polynomial variable, e.g. "a+1", "2a", "0".
std::string to_poly_string(const FieldElement& x);

}  // namespace gqm
