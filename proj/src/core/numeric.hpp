#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tropitev {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den = 1);
std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
Rational parse_rational(std::string_view text);
BigInt factorial(int n);
BigInt binomial(int n, int k);

enum class ParamKind : int { X = 0, L = 1, Y = 2 };

struct Param {
  ParamKind kind = ParamKind::X;
  int index = 1;

  friend bool operator==(const Param&, const Param&) = default;
  friend auto operator<=>(const Param&, const Param&) = default;
};

inline Param x_param(int i) { return {ParamKind::X, i}; }
inline Param l_param(int i) { return {ParamKind::L, i}; }
inline Param y_param(int i) { return {ParamKind::Y, i}; }

std::string to_string(Param p);
Param parse_param(std::string_view text);

// Exact affine form sum(c_p * p) + c0. Zero coefficients are never stored.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(const Rational& constant);
  LinForm(Param p, const Rational& coeff = 1);

  const std::map<Param, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  Rational coefficient(Param p) const;
  bool is_zero() const { return terms_.empty() && constant_ == 0; }
  // a single parameter with coefficient 1 and no constant
  bool is_param() const;

  void add_term(Param p, const Rational& coeff);
  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(const Rational& c);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator-(LinForm a) { return a *= -1; }
  friend LinForm operator*(LinForm a, const Rational& c) { return a *= c; }
  friend LinForm operator*(const Rational& c, LinForm a) { return a *= c; }
  friend LinForm operator/(LinForm a, const Rational& c);

  friend bool operator==(const LinForm& a, const LinForm& b);
  friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
  // arbitrary but total
  friend bool operator<(const LinForm& a, const LinForm& b);

  template <class F>
  Rational evaluate(F&& value_of) const {
    Rational out = constant_;
    for (const auto& [p, c] : terms_) out += c * value_of(p);
    return out;
  }

  std::string str() const;

 private:
  std::map<Param, Rational> terms_;
  Rational constant_ = 0;
};

LinForm linform_add(const LinForm& a, const LinForm& b);
LinForm linform_scale(const LinForm& a, const Rational& c);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Bareiss fraction-free elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace tropitev
