// Exact scalars: prime fields GF(p) with word-sized p, and the rationals.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qrep {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  enum class Kind { prime, rational };

  static Field prime(std::uint64_t p) {
    if (p >= (1ULL << 63) || !detail::is_prime(p)) {
      throw std::invalid_argument("GF(p) requires a prime p < 2^63, got " + std::to_string(p));
    }
    return Field(Kind::prime, p);
  }
  static Field rationals() { return Field(Kind::rational, 0); }

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  std::uint64_t characteristic() const { return p_; }

  // Number of elements, when finite.
  std::optional<std::uint64_t> cardinality() const {
    if (kind_ == Kind::prime) return p_;
    return std::nullopt;
  }

  std::string to_string() const { return kind_ == Kind::prime ? "GF(" + std::to_string(p_) + ")" : "Q"; }

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::rational;
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  // Rational zero; containers need a default.
  Scalar() = default;

  Scalar(const Field& field, long long value) : field_(field) {
    if (field_.is_prime_field()) {
      auto p = static_cast<long long>(field_.characteristic());  // p < 2^63
      long long r = value % p;
      if (r < 0) r += p;
      residue_ = static_cast<std::uint64_t>(r);
    } else {
      rational_ = mpq_class(mpz_class(static_cast<long>(value)));
    }
  }

  Scalar(const Field& field, const mpq_class& value) : field_(field) {
    if (field_.is_prime_field()) {
      mpz_class p(std::to_string(field_.characteristic()));
      mpz_class num = value.get_num() % p;
      mpz_class den = value.get_den() % p;
      if (num < 0) num += p;
      if (den < 0) den += p;
      if (den == 0) throw std::domain_error("denominator vanishes in " + field_.to_string());
      std::uint64_t n = std::stoull(num.get_str());
      std::uint64_t d = std::stoull(den.get_str());
      residue_ = detail::mul_mod(n, detail::pow_mod(d, field_.characteristic() - 2, field_.characteristic()),
                                 field_.characteristic());
    } else {
      rational_ = value;
      rational_.canonicalize();
    }
  }

  static Scalar zero(const Field& field) { return Scalar(field, 0); }
  static Scalar one(const Field& field) { return Scalar(field, 1); }

  // Accepts "n", "-n" and "n/d".
  static Scalar parse(const Field& field, std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    mpq_class q;
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        q = mpq_class(mpz_class(s, 10));
      } else {
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in scalar '" + s + "'");
        q = mpq_class(num, den);
        q.canonicalize();
      }
    } catch (const std::invalid_argument& e) {
      if (std::string_view(e.what()).starts_with("zero")) throw;
      throw std::invalid_argument("malformed scalar '" + s + "'");
    }
    return Scalar(field, q);
  }

  const Field& field() const { return field_; }
  std::uint64_t residue() const { return residue_; }
  const mpq_class& rational() const { return rational_; }

  bool is_zero() const { return field_.is_prime_field() ? residue_ == 0 : rational_ == 0; }
  bool is_one() const { return field_.is_prime_field() ? residue_ == 1 : rational_ == 1; }

  std::string to_string() const {
    if (field_.is_prime_field()) return std::to_string(residue_);
    if (rational_.get_den() == 1) return rational_.get_num().get_str();
    return rational_.get_num().get_str() + "/" + rational_.get_den().get_str();
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar out = *this;
    if (field_.is_prime_field()) {
      out.residue_ = detail::pow_mod(residue_, field_.characteristic() - 2, field_.characteristic());
    } else {
      out.rational_ = 1 / rational_;
    }
    return out;
  }

  Scalar operator-() const {
    Scalar out = *this;
    if (field_.is_prime_field()) {
      out.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
    } else {
      out.rational_ = -rational_;
    }
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_prime_field()) {
      std::uint64_t p = field_.characteristic();
      residue_ = residue_ >= p - o.residue_ ? residue_ - (p - o.residue_) : residue_ + o.residue_;
    } else {
      rational_ += o.rational_;
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (field_.is_prime_field()) {
      residue_ = detail::mul_mod(residue_, o.residue_, field_.characteristic());
    } else {
      rational_ *= o.rational_;
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_prime_field() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
  }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_) {
      throw std::invalid_argument("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
    }
  }

  Field field_ = Field::rationals();
  std::uint64_t residue_ = 0;
  mpq_class rational_;
};

}  // namespace qrep
