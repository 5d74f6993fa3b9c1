#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace zpd {

enum class FieldKind { Gfp, Rational };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Gfp;
  std::uint32_t p = 32003;

  bool operator==(const FieldDescriptor&) const = default;

  bool char_is_two() const { return kind == FieldKind::Gfp && p == 2; }
  bool char_divides(std::uint64_t n) const {
    return kind == FieldKind::Gfp && n % p == 0;
  }
  std::string name() const {
    return kind == FieldKind::Gfp ? "gfp:" + std::to_string(p) : "q";
  }
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Prime field GF(p). Residues live in [0, p).
class GfpField {
 public:
  using Elem = std::uint32_t;

  explicit GfpField(std::uint32_t p = 32003) : p_(p) {
    if (!is_prime_u32(p)) throw std::invalid_argument("GfpField: p not prime");
    if (p <= 3) throw std::invalid_argument("GfpField: need p > 3");
  }

  std::uint32_t p() const { return p_; }
  FieldDescriptor descriptor() const { return {FieldKind::Gfp, p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return Elem(s);
  }
  Elem sub(Elem a, Elem b) const { return add(a, p_ - b == p_ ? 0 : p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return Elem((std::uint64_t(a) * b) % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GfpField: inverse of zero");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1;
    }
    return Elem(r);
  }

  Elem from_long(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    return Elem(r);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  // Accepts decimal integers (negatives reduced mod p) and "a/b".
  Elem parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_long(std::stoll(s));
    Elem num = from_long(std::stoll(s.substr(0, slash)));
    Elem den = from_long(std::stoll(s.substr(slash + 1)));
    return div(num, den);
  }

  bool operator==(const GfpField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

// Exact rationals, always in lowest terms with positive denominator
// (mpq_class canonicalizes).
class RationalField {
 public:
  using Elem = mpq_class;

  FieldDescriptor descriptor() const { return {FieldKind::Rational, 0}; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

  Elem from_long(long long v) const { return Elem((long)v); }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  Elem parse(const std::string& s) const {
    Elem q(s);
    q.canonicalize();
    return q;
  }

  bool operator==(const RationalField&) const { return true; }

 private:
  const Elem& inv_guard(const Elem& b) const {
    if (sgn(b) == 0) throw std::domain_error("RationalField: division by zero");
    return b;
  }
};

}  // namespace zpd
