#include "tannaka/ring.hpp"

#include <sstream>

namespace tannaka {

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Ring Ring::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw ValidationError("PrimeField modulus " + p.get_str() + " is not prime");
  }
  return Ring(Kind::PrimeField, p);
}

Ring Ring::integers_mod(const mpz_class& n) {
  if (n < 2) {
    throw ValidationError("IntegersMod modulus must be >= 2, got " + n.get_str());
  }
  return Ring(Kind::IntegersMod, n);
}

Ring::Ring(Kind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField:
      field_ = true;
      break;
    case Kind::IntegersMod:
      field_ = mpz_probab_prime_p(modulus_.get_mpz_t(), 40) != 0;
      break;
    case Kind::Integers:
      field_ = false;
      break;
  }
}

Value Ring::reduce(const Value& v) const {
  switch (kind_) {
    case Kind::Rationals:
      return v;
    case Kind::Integers:
      if (v.get_den() != 1) {
        throw ValidationError("non-integral value " + v.get_str() + " over Integers");
      }
      return v;
    case Kind::PrimeField:
    case Kind::IntegersMod: {
      if (v.get_den() == 1) return Value(mod_floor(v.get_num(), modulus_));
      // A fraction a/b is accepted when b is invertible mod N.
      mpz_class inv;
      mpz_class den = v.get_den();
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw ValidationError("denominator " + den.get_str() + " not invertible mod " +
                              modulus_.get_str());
      }
      return Value(mod_floor(v.get_num() * inv, modulus_));
    }
  }
  return v;
}

bool Ring::is_unit(const Value& a) const {
  switch (kind_) {
    case Kind::Rationals:
      return a != 0;
    case Kind::Integers:
      return a == 1 || a == -1;
    case Kind::PrimeField:
    case Kind::IntegersMod: {
      mpz_class g;
      mpz_class num = a.get_num();
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Value Ring::inverse(const Value& a) const {
  if (!is_unit(a)) throw ValidationError(to_string(a) + " is not a unit in " + name());
  switch (kind_) {
    case Kind::Rationals:
      return 1 / a;
    case Kind::Integers:
      return a;
    case Kind::PrimeField:
    case Kind::IntegersMod: {
      mpz_class inv;
      mpz_class num = a.get_num();
      mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
      return Value(inv);
    }
  }
  return a;
}

std::optional<Value> Ring::divide(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::Rationals:
      if (b == 0) return a == 0 ? std::optional<Value>(Value(0)) : std::nullopt;
      return a / b;
    case Kind::Integers: {
      if (b == 0) return a == 0 ? std::optional<Value>(Value(0)) : std::nullopt;
      mpz_class an = a.get_num(), bn = b.get_num();
      if (!mpz_divisible_p(an.get_mpz_t(), bn.get_mpz_t())) return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
      return Value(q);
    }
    case Kind::PrimeField:
    case Kind::IntegersMod: {
      // q*b = a (mod N) is solvable iff g = gcd(b, N) divides a.
      mpz_class an = a.get_num(), bn = b.get_num();
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), bn.get_mpz_t(),
                 modulus_.get_mpz_t());
      if (!mpz_divisible_p(an.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
      mpz_class q = (an / g) * s;
      return Value(mod_floor(q, modulus_));
    }
  }
  return std::nullopt;
}

std::optional<mpz_class> Ring::cardinality() const {
  if (is_finite()) return modulus_;
  return std::nullopt;
}

Value Ring::element(const mpz_class& index) const {
  if (!is_finite()) throw UnsupportedError("cannot enumerate elements of " + name());
  return Value(mod_floor(index, modulus_));
}

std::string Ring::to_string(const Value& v) const { return v.get_str(); }

Value Ring::parse(const std::string& text) const {
  Value v;
  if (v.set_str(text, 10) != 0) throw ValidationError("cannot parse scalar '" + text + "'");
  v.canonicalize();
  if (v.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
  return reduce(v);
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Integers";
    case Kind::Rationals:
      return "Rationals";
    case Kind::PrimeField:
      return "PrimeField(" + modulus_.get_str() + ")";
    case Kind::IntegersMod:
      return "IntegersMod(" + modulus_.get_str() + ")";
  }
  return "?";
}

}  // namespace tannaka
