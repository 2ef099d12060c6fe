#include "wickgit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace wickgit {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("parse_rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw Error("parse_rational: cannot parse '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw Error("RatMat: dimension mismatch in product");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("RatMat: dimension mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("RatMat: dimension mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw Error("RatMat::inverse: matrix must be square");
  const int n = rows_;
  RatMat a = *this;
  RatMat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) throw Error("RatMat::inverse: singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    Rational p = a(col, col);
    for (int j = 0; j < n; ++j) { a(col, j) /= p; inv(col, j) /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational RatMat::det() const {
  if (rows_ != cols_) throw Error("RatMat::det: matrix must be square");
  const int n = rows_;
  RatMat a = *this;
  Rational d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    Rational p = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / p;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

std::vector<std::string> Poly::merge_vars(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poly Poly::lifted(const std::vector<std::string>& vars) const {
  Poly out;
  out.vars_ = vars;
  std::vector<int> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i])
      throw Error("Poly: variable set is not a superset in lift");
    pos[i] = static_cast<int>(it - vars.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_[ne] = c;
  }
  return out;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Poly Poly::operator+(const Poly& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  Poly a = lifted(vars), b = o.lifted(vars);
  for (const auto& [e, c] : b.terms_) a.terms_[e] += c;
  a.prune();
  return a;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  Poly a = lifted(vars), b = o.lifted(vars);
  Poly out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  out.prune();
  return out;
}

bool Poly::operator==(const Poly& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  return lifted(vars).terms_ == o.lifted(vars).terms_;
}

Poly Poly::scaled(const Rational& c) const {
  Poly p = *this;
  for (auto& [e, v] : p.terms_) v *= c;
  p.prune();
  return p;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("Poly::pow: negative exponent");
  Poly r(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) {
    if (is_zero()) return Poly();  // d0/dx = 0 regardless of the variable
    throw Error("Poly::derivative: unknown variable '" + var + "'");
  }
  const size_t k = static_cast<size_t>(it - vars_.begin());
  Poly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents ne = e;
    ne[k] -= 1;
    out.terms_[ne] += c * e[k];
  }
  out.prune();
  return out;
}

Poly Poly::including_variables(const std::vector<std::string>& extra) const {
  std::vector<std::string> sorted = extra;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return lifted(merge_vars(vars_, sorted));
}

Rational Poly::eval(const std::map<std::string, Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw Error("Poly::eval: missing value for variable '" + vars_[i] + "'");
      Rational p = 1;
      for (int k = 0; k < e[i]; ++k) p *= it->second;
      t *= p;
    }
    total += t;
  }
  return total;
}

double Poly::eval_double(const std::map<std::string, double>& point) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw Error("Poly::eval_double: missing value for variable '" + vars_[i] + "'");
      t *= std::pow(it->second, e[i]);
    }
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = false;
    for (int k : e)
      if (k > 0) has_var = true;
    if (!has_var || a != 1) os << rational_to_string(a);
    bool printed = !has_var || a != 1;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

// --- expression parser ------------------------------------------------------

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& allowed;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse_poly: " + msg + " at position " + std::to_string(pos) +
                " in '" + s + "'");
  }

  Poly parse_expr() {
    Poly x = parse_term();
    for (;;) {
      skip_ws();
      if (eat('+')) x = x + parse_term();
      else if (eat('-')) x = x - parse_term();
      else return x;
    }
  }

  Poly parse_term() {
    Poly x = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) x = x * parse_factor();
      else return x;
    }
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) fail("expected integer exponent");
      return base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return base;
  }

  Poly parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of expression");
    if (eat('(')) {
      Poly x = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (eat('-')) return -parse_atom();
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string num = s.substr(start, pos - start);
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        // rational literal p/q (binds tighter than any operator)
        ++pos;
        skip_ws();
        size_t ds = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == ds) fail("expected denominator digits");
        return Poly(Rational(BigInt(num), BigInt(s.substr(ds, pos - ds))));
      }
      return Poly(Rational(BigInt(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
        fail("unknown variable '" + name + "'");
      return Poly::variable(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& allowed) {
  PolyParser p{text, 0, allowed};
  Poly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace wickgit
