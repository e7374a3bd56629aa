#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rvl {

/// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
/// Thin wrapper over GMP's mpq_class that canonicalizes at every
/// construction boundary (mpq arithmetic keeps canonical values canonical,
/// but raw construction does not).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long n, long d) : v_(static_cast<signed long>(n), static_cast<signed long>(d)) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }

  /// Parses "p" or "p/q" with an optional leading '-'.
  static Rat from_string(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// Least integer >= value.
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }
  /// Greatest integer <= value.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }

  /// "p/q" reduced, or plain integer when q = 1.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rat(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

inline Rat Rat::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
  v.canonicalize();
  Rat r;
  r.v_ = v;
  return r;
}

}  // namespace rvl
