#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace hopf {

// Arithmetic mode shared by every value taking part in one computation:
// exact rationals (p == 0) or the prime field Z/p (p prime).
struct ScalarMode {
  long p = 0;

  bool is_rational() const { return p == 0; }
  std::string str() const {
    return p == 0 ? std::string("rational") : "mod " + std::to_string(p);
  }

  friend bool operator==(const ScalarMode& a, const ScalarMode& b) { return a.p == b.p; }
  friend bool operator!=(const ScalarMode& a, const ScalarMode& b) { return a.p != b.p; }
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline ScalarMode rational_mode() { return ScalarMode{0}; }

inline ScalarMode mod_p_mode(long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p >= (1L << 31)) throw std::invalid_argument("modulus too large");
  return ScalarMode{p};
}

// An exact field element. Values within a machine-word range are kept as
// a canonical long fraction (gcd(|num|, den) = 1, den > 0); anything
// larger spills into an arbitrary-precision GMP rational, so arithmetic
// is exact at every size. Mod-p residues live in [0, p). Mixing modes in
// one operation is a logic error and throws.
class Scalar {
  // numerators and denominators are kept below this bound so that cross
  // products fit comfortably in 128-bit intermediates
  static constexpr long kSmall = 1L << 31;

 public:
  Scalar() : n_(0), d_(1), p_(0) {}

  static Scalar zero(ScalarMode m) { return Scalar(0, 1, m.p); }
  static Scalar one(ScalarMode m) { return Scalar(1, 1, m.p); }

  static Scalar integer(long n, ScalarMode m) {
    if (m.p != 0) {
      long r = n % m.p;
      if (r < 0) r += m.p;
      return Scalar(r, 1, m.p);
    }
    return from_i128(n, 1);
  }

  static Scalar rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return from_i128(num, den);
  }

  static Scalar rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    Scalar s;
    s.p_ = 0;
    s.big_ = std::make_unique<mpq_class>(std::move(c));
    s.demote();
    return s;
  }

  static Scalar mod_p(long value, long p) { return integer(value, mod_p_mode(p)); }

  Scalar(const Scalar& o)
      : n_(o.n_), d_(o.d_), p_(o.p_),
        big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    n_ = o.n_;
    d_ = o.d_;
    p_ = o.p_;
    big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;

  ScalarMode mode() const { return ScalarMode{p_}; }
  bool is_zero() const { return big_ ? (*big_ == 0) : n_ == 0; }
  bool is_one() const { return big_ ? (*big_ == 1) : (n_ == 1 && d_ == 1); }

  mpq_class value() const {
    if (big_) return *big_;
    return mpq_class(n_, d_);
  }

  Scalar operator-() const {
    if (p_ != 0) return n_ == 0 ? *this : Scalar(p_ - n_, 1, p_);
    if (big_) return from_big(-*big_, p_);
    return Scalar(-n_, d_, 0);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.require_same_mode(b);
    if (a.p_ != 0) {
      long r = a.n_ + b.n_;  // both < p < 2^31
      if (r >= a.p_) r -= a.p_;
      return Scalar(r, 1, a.p_);
    }
    if (!a.big_ && !b.big_) {
      __int128 num = (__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_;
      __int128 den = (__int128)a.d_ * b.d_;
      return from_i128(num, den);
    }
    return from_big(a.value() + b.value(), 0);
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.require_same_mode(b);
    if (a.p_ != 0) return Scalar((long)(((__int128)a.n_ * b.n_) % a.p_), 1, a.p_);
    if (!a.big_ && !b.big_) {
      if (a.n_ == 0 || b.n_ == 0) return Scalar(0, 1, 0);
      return from_i128((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_);
    }
    return from_big(a.value() * b.value(), 0);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (p_ != 0) {
      // extended Euclid on longs; p is prime so the inverse exists
      long t = 0, nt = 1, r = p_, nr = n_;
      while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
      }
      if (t < 0) t += p_;
      return Scalar(t, 1, p_);
    }
    if (big_) return from_big(1 / *big_, 0);
    return make_small(d_, n_, 0);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_mode(b);
    // canonical by value: a spilled value never fits the small range
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

 private:
  Scalar(long n, long d, long p) : n_(n), d_(d), p_(p) {}

  static Scalar make_small(long num, long den, long p) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long g = gcd_long(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Scalar(num, den, p);
  }

  static long gcd_long(long a, long b) {
    while (b != 0) {
      long t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Scalar from_i128(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > -kSmall && num < kSmall && den < kSmall) return Scalar((long)num, (long)den, 0);
    mpq_class q = to_mpq(num) / to_mpq(den);
    q.canonicalize();
    Scalar s;
    s.big_ = std::make_unique<mpq_class>(std::move(q));
    return s;
  }

  static mpq_class to_mpq(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    mpz_class z = (unsigned long)(u >> 64);
    z <<= 64;
    z += (unsigned long)u;
    if (neg) z = -z;
    return mpq_class(z);
  }

  static Scalar from_big(mpq_class q, long p) {
    q.canonicalize();
    Scalar s;
    s.p_ = p;
    s.big_ = std::make_unique<mpq_class>(std::move(q));
    s.demote();
    return s;
  }

  void demote() {
    if (!big_) return;
    if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
      long n = big_->get_num().get_si(), d = big_->get_den().get_si();
      if (n > -kSmall && n < kSmall && d < kSmall) {
        n_ = n;
        d_ = d;
        big_.reset();
      }
    }
  }

  void require_same_mode(const Scalar& b) const {
    if (p_ != b.p_) throw std::invalid_argument("scalar mode mismatch");
  }

  long n_, d_;
  long p_;  // 0 = rational, otherwise the prime modulus
  std::unique_ptr<mpq_class> big_;
};

}  // namespace hopf
