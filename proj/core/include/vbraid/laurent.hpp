#pragma once

#include <array>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vbraid/common.hpp"

namespace vbraid {

using Integer = mpz_class;

enum class Var : int { t = 0, s = 1, u = 2, v = 3 };

using Exponent = std::array<int, 4>;

// Integer Laurent polynomial in t, s, u, v. No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& c, const Exponent& e);
  static LaurentPoly var(Var x, int power = 1);

  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Integer> as_integer() const;

  // Units of the Laurent ring are exactly +-monomials.
  bool is_unit() const;
  LaurentPoly unit_inverse() const;

  LaurentPoly substitute(Var x, const LaurentPoly& value) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(int k) const;
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Integer& c);
  std::map<Exponent, Integer> terms_;
};

enum class ArithOp { Add, Sub, Mul };
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

// Accepts the output of to_string: signed terms such as "2*t^-1*s" or "1 - t".
LaurentPoly parse_laurent(std::string_view text);

}  // namespace vbraid
