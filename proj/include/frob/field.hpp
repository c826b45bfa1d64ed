#ifndef FROB_FIELD_HPP
#define FROB_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace frob {

/// Deterministic primality test by trial division; p is at desk scale.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime field F_p with canonical representatives in [0, p).
/// Inverses by extended Euclid; all arithmetic exact.
class GF {
 public:
  using Value = std::int64_t;

  explicit GF(std::int64_t p) : p_(p) {
    if (p <= 1 || p > (std::int64_t{1} << 31) ||
        !is_prime_u64(static_cast<std::uint64_t>(p)))
      throw std::invalid_argument("GF: modulus must be a prime < 2^31, got " +
                                  std::to_string(p));
  }

  std::int64_t characteristic() const { return p_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }

  Value from_int(long long n) const {
    std::int64_t r = static_cast<std::int64_t>(n % p_);
    return r < 0 ? r + p_ : r;
  }

  Value from_mpz(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Value>(r.get_si());
  }

  Value add(Value a, Value b) const {
    Value r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Value sub(Value a, Value b) const {
    Value r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
  Value mul(Value a, Value b) const { return (a * b) % p_; }

  Value inv(Value a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t r0 = a, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      std::int64_t s2 = s0 - q * s1;
      r0 = r1; r1 = r2;
      s0 = s1; s1 = s2;
    }
    return from_int(s0);
  }
  Value div(Value a, Value b) const { return mul(a, inv(b)); }

  bool is_zero(Value a) const { return a == 0; }
  bool is_one(Value a) const { return a == 1; }

  std::string to_string(Value a) const { return std::to_string(a); }

  bool operator==(const GF& o) const { return p_ == o.p_; }
  bool operator!=(const GF& o) const { return p_ != o.p_; }

 private:
  std::int64_t p_;
};

/// The rationals with arbitrary-precision integers (GMP).
class QQ {
 public:
  using Value = mpq_class;

  std::int64_t characteristic() const { return 0; }

  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }

  Value from_int(long long n) const { return Value(static_cast<long>(n)); }
  Value from_mpz(const mpz_class& n) const { return Value(n); }

  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const {
    if (a == 0) throw std::domain_error("QQ: inverse of zero");
    return Value(1) / a;
  }
  Value div(const Value& a, const Value& b) const { return a / inv_guard(b); }

  bool is_zero(const Value& a) const { return a == 0; }
  bool is_one(const Value& a) const { return a == 1; }

  std::string to_string(const Value& a) const { return a.get_str(); }

  bool operator==(const QQ&) const { return true; }
  bool operator!=(const QQ&) const { return false; }

 private:
  static const Value& inv_guard(const Value& b) {
    if (b == 0) throw std::domain_error("QQ: division by zero");
    return b;
  }
};

}  // namespace frob

#endif  // FROB_FIELD_HPP
