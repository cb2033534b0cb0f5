// Exact coefficient arithmetic: arbitrary-precision rationals, prime fields,
// and integer Laurent polynomials in one variable q, behind a small uniform
// field-context interface used by the rest of the library.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace blab {

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision rational, always in lowest terms with a
// positive denominator (mpq_class keeps that invariant after canonicalize).

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  // Rendered as "num/den", denominator always printed ("3/1", "-1/2").
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------
// Fp: element of a prime field. The modulus travels with the value; a
// default-constructed element is the modulus-agnostic zero so that containers
// can be filled before the field is known.

// A value not yet attached to a modulus (p_ == 0) is an exact signed
// integer; integers embed consistently in every prime field, so such a value
// adopts the modulus of the first attached operand it meets. Generic code
// can therefore use integer literals like Fp(-1).
class Fp {
 public:
  Fp() = default;
  Fp(long long v) : v_(v) {}  // unattached integer
  Fp(long long v, std::uint32_t p) : p_(p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = r;
  }

  long long value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(p_ - v_, p_); }
  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = join(a, b);
    if (p == 0) return Fp(a.v_ + b.v_);
    return Fp(a.att(p).v_ + b.att(p).v_, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = join(a, b);
    if (p == 0) return Fp(a.v_ * b.v_);
    return Fp(a.att(p).v_ * b.att(p).v_, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t p = join(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.att(p).v_ == b.att(p).v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inv() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::domain_error("Fp: inverse of unattached non-unit");
    }
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid
    long long a = v_, b = p_, x0 = 0, x1 = 1;
    while (a > 1) {
      long long q = a / b;
      a -= q * b;
      std::swap(a, b);
      x1 -= q * x0;
      std::swap(x0, x1);
    }
    return Fp(x1, p_);
  }

  std::string str() const {
    return std::to_string(v_) + " (mod " + std::to_string(p_) + ")";
  }

 private:
  Fp att(std::uint32_t p) const { return p_ == 0 ? Fp(v_, p) : *this; }
  static std::uint32_t join(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw std::domain_error("Fp: modulus mismatch");
    return a.p_;
  }
  long long v_ = 0;
  std::uint32_t p_ = 0;  // 0 = unattached integer
};

// ---------------------------------------------------------------------------
// Laurent: element of Z[q, q^-1], a map exponent -> nonzero integer
// coefficient. Units are +-q^k; only those can be inverted.

class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) {
    if (c != 0) c_[0] = c;
  }
  static Laurent q_power(int e, long c = 1) {
    Laurent r;
    if (c != 0) r.c_[e] = c;
    return r;
  }

  bool is_zero() const { return c_.empty(); }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) {
        int e = checked_exp_add(ea, eb);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return a.c_ != b.c_; }

  bool is_unit() const {
    return c_.size() == 1 && (c_.begin()->second == 1 || c_.begin()->second == -1);
  }
  Laurent inv() const {
    if (!is_unit()) throw std::domain_error("Laurent: inverse of non-unit");
    Laurent r;
    r.c_[-c_.begin()->first] = c_.begin()->second;  // (+-q^e)^-1 = +-q^-e
    return r;
  }

  // Ring homomorphism q -> 1: the sum of all coefficients.
  mpz_class specialize_q1() const {
    mpz_class s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
  }

  const std::map<int, mpz_class>& terms() const { return c_; }

  // "c*q^e" terms in increasing exponent order, joined by "+"; "0" if zero.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : c_) {
      if (!s.empty()) s += "+";
      s += c.get_str() + "*q^" + std::to_string(e);
    }
    return s;
  }

 private:
  static int checked_exp_add(int a, int b) {
    long long e = static_cast<long long>(a) + b;
    if (e > (1 << 20) || e < -(1 << 20))
      throw std::overflow_error("Laurent: exponent overflow");
    return static_cast<int>(e);
  }
  void add_term(int e, const mpz_class& c) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (c != 0) c_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  std::map<int, mpz_class> c_;
};

// ---------------------------------------------------------------------------
// Field contexts. Algorithms are templated over one of these; the context
// supplies construction, the elements supply arithmetic.

struct Rationals {
  using Elem = Rational;
  static constexpr unsigned characteristic() { return 0; }
  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem from_int(long v) const { return Rational(v); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "q"; }
};

struct PrimeField {
  std::uint32_t p;
  using Elem = Fp;
  unsigned characteristic() const { return p; }
  explicit PrimeField(std::uint32_t p_) : p(p_) {
    if (p_ < 2) throw std::domain_error("PrimeField: modulus must be >= 2");
    for (std::uint32_t d = 2; d * d <= p_; ++d)
      if (p_ % d == 0) throw std::domain_error("PrimeField: modulus not prime");
  }
  Elem zero() const { return Fp(0, p); }
  Elem one() const { return Fp(1, p); }
  Elem from_int(long v) const { return Fp(v, p); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "fp" + std::to_string(p); }
};

struct LaurentRing {
  using Elem = Laurent;
  static constexpr unsigned characteristic() { return 0; }
  Elem zero() const { return Laurent(); }
  Elem one() const { return Laurent(1); }
  Elem from_int(long v) const { return Laurent(v); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "laurent"; }
};

// Runtime field descriptor: the rationals or a prime field.
struct FieldSpec {
  bool rational = true;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{true, 0}; }
  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);  // validates primality
    return FieldSpec{false, p};
  }

  // Accepts "q" or "fp<p>".
  static FieldSpec parse(const std::string& s) {
    if (s == "q") return rationals();
    if (s.size() > 2 && s.substr(0, 2) == "fp")
      return prime(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
    throw std::invalid_argument("unknown field: " + s);
  }

  std::string name() const { return rational ? "q" : "fp" + std::to_string(p); }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.rational == b.rational && (a.rational || a.p == b.p);
  }
};

// Dispatches fn over the concrete field context named by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn(Rationals{});
  return fn(PrimeField{spec.p});
}

// Configured prime set; overridable per run (BLAB_PRIMES in the CLI).
inline std::vector<std::uint32_t> default_primes() { return {2, 3, 5, 7}; }

inline std::vector<FieldSpec> fields_over(const std::vector<std::uint32_t>& primes) {
  std::vector<FieldSpec> fs{FieldSpec::rationals()};
  for (auto p : primes) fs.push_back(FieldSpec::prime(p));
  return fs;
}

// The fields a verification runs over when none are requested explicitly.
inline std::vector<FieldSpec> default_check_fields() { return fields_over({2, 3, 5}); }

}  // namespace blab
