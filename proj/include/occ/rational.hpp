// Exact rational scalar on top of GMP.  Everything geometric in this library
// is computed over Q; no floating point is allowed anywhere near a predicate.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace occ {

// Canonical rational: always lowest terms, denominator > 0.  mpq_class does
// not canonicalize on construction from num/den, so we do it ourselves and
// keep the invariant from then on (all arithmetic preserves it).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) { canon(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) { canon(); }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "3", "-3", "3/4", "-3/4" (base 10).
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}
  void canon() {
    if (v_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 step folded into a running hash
  x += 0x9e3779b97f4a7c15ull + h;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_mpz(const mpz_class& z);

inline std::uint64_t hash_rational(const Rational& r) {
  return hash_mix(hash_mpz(r.num()), hash_mpz(r.den()));
}

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return hash_rational(r); }
};

}  // namespace occ
