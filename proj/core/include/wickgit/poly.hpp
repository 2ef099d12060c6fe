#pragma once

#include <map>
#include <string>
#include <vector>

#include "wickgit/rational.hpp"

namespace wickgit {

/// Multivariate polynomial over the exact rationals.
///
/// A Poly carries its own ordered variable list; binary operations merge the
/// variable sets by name, so polynomials built over different coordinate
/// subsets combine without ceremony.  Terms live in a canonical map keyed by
/// exponent vector, zero coefficients are pruned, which makes equality and
/// the exactness guarantee ((p+q)-q == p) literal.
class Poly {
public:
  using Exponents = std::vector<int>;

  Poly() = default;
  explicit Poly(const Rational& c);
  static Poly constant(const Rational& c) { return Poly(c); }
  static Poly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Rational& c) const;
  Poly pow(int e) const;

  /// Partial derivative with respect to a named variable.  Unknown variable
  /// names are an error (rather than silently returning zero).
  Poly derivative(const std::string& var) const;

  /// Same polynomial re-expressed over the union with `extra` variables, so
  /// that later derivatives by any of them are legal (and possibly zero).
  Poly including_variables(const std::vector<std::string>& extra) const;

  /// Exact evaluation at a rational point given as {var -> value}.  Missing
  /// assignments for variables actually present in the poly are an error.
  Rational eval(const std::map<std::string, Rational>& point) const;
  double eval_double(const std::map<std::string, double>& point) const;

  std::string to_string() const;

private:
  void prune();
  /// Re-express this poly over the given (superset) variable list.
  Poly lifted(const std::vector<std::string>& vars) const;
  static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b);

  std::vector<std::string> vars_;          // sorted by name
  std::map<Exponents, Rational> terms_;    // exponent vector -> coefficient
};

/// Parse a polynomial from the expression grammar used by metric files:
/// rational coefficients, named variables, operators + - * ^ and parentheses.
/// Example: "2*v^2 - 1/3*u*V + 7".  `allowed` restricts the variable names.
Poly parse_poly(const std::string& text, const std::vector<std::string>& allowed);

}  // namespace wickgit
