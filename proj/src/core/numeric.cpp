#include "numeric.hpp"

#include <algorithm>
#include <charconv>

#include "error.hpp"

namespace tropitev {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorCode::Parse, "bad rational '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) bad();
  return make_rational(n, d);
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string to_string(Param p) {
  const char* name = p.kind == ParamKind::X ? "x_" : p.kind == ParamKind::L ? "L_" : "y_";
  return name + std::to_string(p.index);
}

Param parse_param(std::string_view text) {
  if (text.size() < 3 || text[1] != '_') fail(ErrorCode::Parse, "bad parameter '" + std::string(text) + "'");
  Param p;
  switch (text[0]) {
    case 'x': p.kind = ParamKind::X; break;
    case 'L': p.kind = ParamKind::L; break;
    case 'y': p.kind = ParamKind::Y; break;
    default: fail(ErrorCode::Parse, "bad parameter '" + std::string(text) + "'");
  }
  auto rest = text.substr(2);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p.index);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || p.index < 1)
    fail(ErrorCode::Parse, "bad parameter '" + std::string(text) + "'");
  return p;
}

LinForm::LinForm(const Rational& constant) : constant_(constant) { constant_.canonicalize(); }

LinForm::LinForm(Param p, const Rational& coeff) { add_term(p, coeff); }

Rational LinForm::coefficient(Param p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LinForm::is_param() const {
  return terms_.size() == 1 && constant_ == 0 && terms_.begin()->second == 1;
}

void LinForm::add_term(Param p, const Rational& coeff0) {
  Rational coeff = coeff0;
  coeff.canonicalize();
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(p, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LinForm& LinForm::operator+=(const LinForm& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  constant_ += o.constant_;
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  constant_ -= o.constant_;
  return *this;
}

LinForm& LinForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  constant_ *= c;
  return *this;
}

LinForm operator/(LinForm a, const Rational& c) {
  if (c == 0) fail(ErrorCode::InvalidArgument, "division of a linear form by zero");
  return a *= Rational(1) / c;
}

bool operator==(const LinForm& a, const LinForm& b) {
  return a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

bool operator<(const LinForm& a, const LinForm& b) {
  if (a.constant_ != b.constant_) return a.constant_ < b.constant_;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string LinForm::str() const {
  std::string out;
  auto emit = [&](const Rational& c, const std::string& name) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (name.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += name;
    }
  };
  // largest scale first: L, then x, then y
  for (ParamKind kind : {ParamKind::L, ParamKind::X, ParamKind::Y})
    for (const auto& [p, c] : terms_)
      if (p.kind == kind) emit(c, to_string(p));
  if (constant_ != 0 || out.empty()) emit(constant_, "");
  return out;
}

LinForm linform_add(const LinForm& a, const LinForm& b) { return a + b; }
LinForm linform_scale(const LinForm& a, const Rational& c) { return a * c; }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::SizeMismatch, "matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

}  // namespace tropitev
