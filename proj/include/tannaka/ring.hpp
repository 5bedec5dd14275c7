#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace tannaka {

using Value = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but outside what is implemented (ring maps, non-local
// rings, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// The base rings every computation runs over.  Elements are stored as mpq_class;
// for Integers and IntegersMod the denominator is always 1 and for IntegersMod
// and PrimeField the numerator is the residue in [0, N).
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField, IntegersMod };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  // Throws ValidationError unless p is prime.
  static Ring prime_field(const mpz_class& p);
  // Throws ValidationError unless n >= 2.
  static Ring integers_mod(const mpz_class& n);

  Kind kind() const { return kind_; }
  // p for PrimeField, N for IntegersMod, 0 otherwise.
  const mpz_class& modulus() const { return modulus_; }

  bool is_field() const { return field_; }
  bool is_finite() const { return kind_ == Kind::PrimeField || kind_ == Kind::IntegersMod; }
  bool is_residue_ring() const { return is_finite(); }

  Value reduce(const Value& v) const;
  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  Value from_int(long v) const { return reduce(Value(v)); }

  Value add(const Value& a, const Value& b) const { return reduce(a + b); }
  Value sub(const Value& a, const Value& b) const { return reduce(a - b); }
  Value mul(const Value& a, const Value& b) const { return reduce(a * b); }
  Value neg(const Value& a) const { return reduce(-a); }

  bool is_unit(const Value& a) const;
  // Throws ValidationError for non-units.
  Value inverse(const Value& a) const;
  // Some q with q * b == a, if one exists.
  std::optional<Value> divide(const Value& a, const Value& b) const;

  // Number of elements for finite rings, nullopt otherwise.
  std::optional<mpz_class> cardinality() const;
  // The i-th element in a fixed enumeration of a finite ring.
  Value element(const mpz_class& index) const;

  std::string to_string(const Value& v) const;
  Value parse(const std::string& text) const;
  std::string name() const;

  bool operator==(const Ring& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  Ring(Kind kind, mpz_class modulus);

  Kind kind_;
  mpz_class modulus_;
  bool field_;
};

// A ring element that remembers its ring.  Matrices store bare Values; this is
// the type used at API boundaries where a lone element travels.
class Scalar {
 public:
  Scalar(Ring ring, const Value& v) : ring_(std::move(ring)), value_(ring_.reduce(v)) {}

  const Ring& ring() const { return ring_; }
  const Value& value() const { return value_; }

  Scalar operator+(const Scalar& o) const { return {ring_, value_ + o.value_}; }
  Scalar operator-(const Scalar& o) const { return {ring_, value_ - o.value_}; }
  Scalar operator*(const Scalar& o) const { return {ring_, value_ * o.value_}; }
  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && value_ == o.value_; }
  std::string to_string() const { return ring_.to_string(value_); }

 private:
  Ring ring_;
  Value value_;
};

// Residue of an integer-valued Value modulo m, in [0, m).
mpz_class mod_floor(const mpz_class& a, const mpz_class& m);

}  // namespace tannaka
