#include "gqm/qcount.hpp"

#include "gqm/error.hpp"
#include "gqm/gf.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace gqm {

QInt q_int(unsigned N, std::uint64_t q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgs, "q must be >= 1");
  QInt sum = 0;
  QInt term = 1;
  for (unsigned i = 0; i < N; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

QInt q_factorial(unsigned N, std::uint64_t q) {
  QInt prod = 1;
  for (unsigned i = 1; i <= N; ++i) prod *= q_int(i, q);
  return prod;
}

QInt gaussian_binomial(unsigned N, unsigned M, std::uint64_t q) {
  if (M > N) throw Error(ErrorKind::InvalidArgs, "M > N in Gaussian binomial");
  const QInt num = q_factorial(N, q);
  const QInt den = q_factorial(M, q) * q_factorial(N - M, q);
  QInt quot;
  QInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw Error(ErrorKind::InternalInvariantViolation, "inexact Gaussian binomial");
  return quot;
}

QInt subspace_count(unsigned N, int k, std::uint64_t q) {
  if (k < -1 || k > static_cast<int>(N) - 1) {
    throw Error(ErrorKind::InvalidArgs, "subspace dimension out of range");
  }
  return gaussian_binomial(N, static_cast<unsigned>(k + 1), q);
}

QInt points_per_subspace(int k, std::uint64_t q) {
  if (k < -1) throw Error(ErrorKind::InvalidArgs, "subspace dimension out of range");
  return q_int(static_cast<unsigned>(k + 1), q);
}

QInt brute_force_subspace_count(unsigned N, int k, std::uint64_t q) {
  unsigned p = 0;
  unsigned n = 0;
  if (!factor_prime_power(q, p, n)) {
    throw Error(ErrorKind::InvalidField, std::to_string(q) + " is not a prime power");
  }
  if (k < -1 || k > static_cast<int>(N) - 1) {
    throw Error(ErrorKind::InvalidArgs, "subspace dimension out of range");
  }
  std::uint64_t size = 1;
  for (unsigned i = 0; i < N; ++i) {
    size *= q;
    if (size > (std::uint64_t{1} << 20)) throw Error(ErrorKind::TooLarge, "q^N exceeds 2^20");
  }
  const auto field = Field::create(p, n);
  const auto elems = field->elements();
  const auto total = static_cast<std::uint32_t>(size);

  // Vectors are encoded base q, entry 0 least significant.
  auto decode = [&](std::uint32_t code) {
    std::vector<FieldElement> v;
    v.reserve(N);
    for (unsigned i = 0; i < N; ++i) {
      v.push_back(elems[code % q]);
      code /= static_cast<std::uint32_t>(q);
    }
    return v;
  };
  auto encode = [&](const std::vector<FieldElement>& v) {
    std::uint32_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * static_cast<std::uint32_t>(q) + v[i].code();
    return code;
  };
  auto axpy = [&](std::uint32_t s, const FieldElement& c, std::uint32_t v) {
    auto a = decode(s);
    const auto b = decode(v);
    for (unsigned i = 0; i < N; ++i) a[i] += c * b[i];
    return encode(a);
  };

  using Subspace = std::vector<std::uint32_t>;  // sorted member codes
  std::set<Subspace> level{Subspace{0}};
  for (int dim = 0; dim < k + 1; ++dim) {
    std::set<Subspace> next;
    for (const auto& sub : level) {
      std::vector<bool> member(total, false);
      for (auto s : sub) member[s] = true;
      for (std::uint32_t v = 1; v < total; ++v) {
        if (member[v]) continue;
        Subspace span;
        span.reserve(sub.size() * q);
        for (auto s : sub) {
          for (const auto& c : elems) span.push_back(axpy(s, c, v));
        }
        std::sort(span.begin(), span.end());
        next.insert(std::move(span));
      }
    }
    level = std::move(next);
  }
  return QInt(level.size());
}

}  // namespace gqm
