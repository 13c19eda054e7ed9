#include "gqm/gf.hpp"

#include "gqm/error.hpp"

#include <algorithm>

namespace gqm {

namespace {

using Poly = std::vector<unsigned>;  // ascending degree, mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic g.
Poly poly_rem(Poly a, const Poly& g, unsigned p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * g[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_rem(std::move(prod), mod, p);
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of t, c0 least significant.
Poly monic_from_index(std::uint64_t t, unsigned d, unsigned p) {
  Poly g(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    g[i] = static_cast<unsigned>(t % p);
    t /= p;
  }
  g[d] = 1;
  return g;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      if (poly_rem(f, monic_from_index(t, d, p), p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree n, comparing
// (c0, c1, ..., c(n-1)) with c0 most significant.
Poly smallest_irreducible(unsigned p, unsigned n) {
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(n + 1, 0);
    std::uint64_t rest = t;
    for (unsigned i = n; i-- > 0;) {
      f[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::InternalInvariantViolation, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool factor_prime_power(std::uint64_t q, unsigned& p, unsigned& n) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % d == 0) {
    rest /= d;
    ++e;
  }
  if (rest != 1) return false;
  p = static_cast<unsigned>(d);
  n = e;
  return true;
}

FieldPtr Field::create(unsigned p, unsigned n) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::FieldTooLarge,
                  "field order exceeds " + std::to_string(kMaxOrder));
    }
  }
  return FieldPtr(new Field(p, n));
}

Field::Field(unsigned p, unsigned n)
    : p_(p), n_(n), q_(static_cast<std::uint32_t>(ipow(p, n))), modulus_(smallest_irreducible(p, n)) {
  auto to_poly = [&](std::uint32_t code) {
    Poly a(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
      a[i] = code % p_;
      code /= p_;
    }
    trim(a);
    return a;
  };
  auto to_code = [&](const Poly& a) {
    std::uint32_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
    return code;
  };
  auto slow_pow = [&](const Poly& base, std::uint64_t e) {
    Poly result{1};
    Poly b = base;
    while (e > 0) {
      if (e & 1) result = poly_mulmod(result, b, modulus_, p_);
      b = poly_mulmod(b, b, modulus_, p_);
      e >>= 1;
    }
    return result;
  };

  const std::uint64_t group_order = q_ - 1;
  const auto factors = prime_factors(group_order);
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < q_ && gen == 0; ++c) {
    const Poly candidate = to_poly(c);
    bool full = true;
    for (auto f : factors) {
      if (slow_pow(candidate, group_order / f) == Poly{1}) {
        full = false;
        break;
      }
    }
    if (full) gen = c;
  }
  if (gen == 0) throw Error(ErrorKind::InternalInvariantViolation, "no generator found");

  exp_.resize(group_order);
  log_.assign(q_, 0);
  Poly acc{1};
  const Poly g = to_poly(gen);
  for (std::uint64_t k = 0; k < group_order; ++k) {
    const std::uint32_t code = to_code(acc);
    exp_[k] = code;
    log_[code] = static_cast<std::uint32_t>(k);
    acc = poly_mulmod(acc, g, modulus_, p_);
  }
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) throw Error(ErrorKind::InvalidArgs, "element code out of range");
  return {this, code};
}

FieldElement Field::from_coeffs(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != n_) throw Error(ErrorKind::InvalidArgs, "expected " + std::to_string(n_) + " coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorKind::InvalidArgs, "coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return {this, code};
}

FieldElement Field::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.push_back({this, c});
  return out;
}

std::uint32_t Field::log(const FieldElement& x) const {
  check_same(x.field());
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgs, "log of zero");
  return log_[x.code()];
}

FieldElement Field::exp(long long k) const {
  const long long m = static_cast<long long>(exp_.size());
  long long r = k % m;
  if (r < 0) r += m;
  return {this, exp_[static_cast<std::size_t>(r)]};
}

std::string Field::modulus_string() const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const unsigned c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::uint32_t Field::add_codes(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) return (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::neg_code(std::uint32_t a) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::mul_codes(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % exp_.size()];
}

void Field::check_same(const Field& other) const {
  if (!same_as(other)) {
    throw Error(ErrorKind::FieldMismatch,
                "GF(" + std::to_string(q_) + ") vs GF(" + std::to_string(other.q_) + ")");
  }
}

std::vector<unsigned> FieldElement::coeffs() const {
  std::vector<unsigned> out(field_->n_, 0);
  std::uint32_t c = code_;
  for (auto& digit : out) {
    digit = c % field_->p_;
    c /= field_->p_;
  }
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  field_->check_same(*rhs.field_);
  return {field_, field_->add_codes(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  field_->check_same(*rhs.field_);
  return {field_, field_->add_codes(code_, field_->neg_code(rhs.code_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg_code(code_)}; }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  field_->check_same(*rhs.field_);
  return {field_, field_->mul_codes(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inv(); }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const auto m = field_->exp_.size();
  return {field_, field_->exp_[(m - field_->log_[code_]) % m]};
}

FieldElement FieldElement::pow(long long k) const {
  if (is_zero()) {
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? field_->one() : *this;
  }
  const long long m = static_cast<long long>(field_->exp_.size());
  long long e = (static_cast<long long>(field_->log_[code_]) * (k % m)) % m;
  if (e < 0) e += m;
  return {field_, field_->exp_[static_cast<std::size_t>(e)]};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.code_ == b.code_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  return a.code_ <=> b.code_;
}

FieldElement signed_coefficient(int sign, const FieldElement& x) { return sign < 0 ? -x : x; }

std::string to_string(const FieldElement& x) {
  const Field& f = x.field();
  std::string out = std::to_string(f.characteristic()) + "^" + std::to_string(f.degree()) + ":";
  const auto c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c[i]);
  }
  return out;
}

std::string to_poly_string(const FieldElement& x) {
  if (x.is_zero()) return "0";
  const auto c = x.coeffs();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace gqm
