#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "wickgit/common.hpp"

namespace wickgit {

/// Exact rational scalar with arbitrary-precision integer parts.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parse "p", "-p" or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

/// Render as "p" or "p/q" with a canonical sign (denominator positive).
std::string rational_to_string(const Rational& r);

/// Dense matrix of rationals with exact arithmetic.  Small sizes only; this
/// backs the exact curvature engines where floating point would be dishonest.
class RatMat {
public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  bool equals(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  /// Exact inverse via Gauss-Jordan.  Throws Error if singular.
  RatMat inverse() const;
  Rational det() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace wickgit
