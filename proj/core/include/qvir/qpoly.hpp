#pragma once

// Exact Laurent polynomials in q with exponents in (1/8)*Z and
// arbitrary-precision integer coefficients, plus explicitly truncated
// power series built on top of them.  Everything downstream (q-binomials,
// lattice-path generating functions, character series) is expressed in
// this value type so that identity checks are exact, never floating point.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace qvir {

using Coeff = boost::multiprecision::cpp_int;

// An exponent of q, stored as an integer count of eighths.  All exponents
// that occur in this library live in (1/8)*Z (most are quarter- or
// half-integers); storing the denominator-8 numerator keeps arithmetic in
// plain integers.
struct QExp {
  std::int64_t eighths = 0;

  constexpr QExp() = default;
  constexpr explicit QExp(std::int64_t e) : eighths(e) {}

  static constexpr QExp integer(std::int64_t n) { return QExp(8 * n); }
  static constexpr QExp half(std::int64_t n) { return QExp(4 * n); }     // n/2
  static constexpr QExp quarter(std::int64_t n) { return QExp(2 * n); }  // n/4

  bool is_integer() const { return eighths % 8 == 0; }
  std::int64_t as_integer() const {
    if (!is_integer()) throw std::domain_error("QExp: not an integer exponent");
    return eighths / 8;
  }

  friend constexpr QExp operator+(QExp a, QExp b) { return QExp(a.eighths + b.eighths); }
  friend constexpr QExp operator-(QExp a, QExp b) { return QExp(a.eighths - b.eighths); }
  friend constexpr QExp operator-(QExp a) { return QExp(-a.eighths); }
  friend constexpr QExp operator*(std::int64_t k, QExp a) { return QExp(k * a.eighths); }
  friend constexpr auto operator<=>(QExp a, QExp b) = default;

  std::string str() const;  // e.g. "3", "-1/2", "7/8"
};

class QPoly {
 public:
  using TermMap = std::map<QExp, Coeff>;

  QPoly() = default;

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return monomial(QExp(0), 1); }
  static QPoly monomial(QExp e, Coeff c);
  // 1 - q^e, the ubiquitous Pochhammer factor
  static QPoly one_minus_qpow(QExp e);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coeff(QExp e) const;
  QExp min_exponent() const;  // throws on zero polynomial
  QExp max_exponent() const;

  void add_term(QExp e, const Coeff& c);  // accumulate, keeping the map canonical

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& operator*=(const Coeff& c);

  // Multiply by q^e (exponent shift).
  QPoly shifted(QExp e) const;

  // Exact division; throws std::domain_error if the division does not
  // terminate with zero remainder in the Laurent polynomial ring.
  friend QPoly div_exact(const QPoly& a, const QPoly& b);

  // Fast exact division by (1 - q^e); same exactness contract.
  QPoly div_one_minus_qpow(QExp e) const;

  // q -> q^(num/den); throws if any resulting exponent leaves (1/8)*Z.
  QPoly substitute_power(std::int64_t num, std::int64_t den) const;

  // Drop all terms with exponent > order (order itself retained).
  QPoly truncated(QExp order) const;

  // Sum of coefficients, i.e. the evaluation at q = 1.
  Coeff eval_at_one() const;

  std::string str() const;  // human-readable, ascending exponents

 private:
  TermMap terms_;  // invariant: no zero coefficients stored
};

// JSON form: {"den": 8, "terms": [[e, "coeff"], ...]} with e the eighths
// numerator, terms sorted ascending, coefficients as decimal strings.
// Round-trips bit-exactly.
void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);

// A power series known exactly up to and including exponent `order`.
struct TruncatedSeries {
  QPoly poly;
  QExp order{0};

  TruncatedSeries() = default;
  TruncatedSeries(QPoly p, QExp ord) : poly(p.truncated(ord)), order(ord) {}

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    QExp ord = std::min(a.order, b.order);
    return TruncatedSeries(a.poly + b.poly, ord);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    QExp ord = std::min(a.order, b.order);
    return TruncatedSeries(a.poly - b.poly, ord);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    QExp ord = std::min(a.order, b.order);
    return TruncatedSeries(a.poly * b.poly, ord);
  }
  // Equal as series: same coefficients up to the common order.
  friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
    QExp ord = std::min(a.order, b.order);
    return a.poly.truncated(ord) == b.poly.truncated(ord);
  }
};

}  // namespace qvir
