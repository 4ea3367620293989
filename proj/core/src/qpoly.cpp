#include "qvir/qpoly.hpp"

#include <numeric>
#include <sstream>

namespace qvir {

std::string QExp::str() const {
  std::int64_t n = eighths;
  std::int64_t d = 8;
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  n /= g;
  d /= g;
  std::ostringstream os;
  os << n;
  if (d != 1) os << '/' << d;
  return os.str();
}

QPoly QPoly::monomial(QExp e, Coeff c) {
  QPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

QPoly QPoly::one_minus_qpow(QExp e) {
  QPoly p = one();
  p.add_term(e, -1);
  return p;
}

Coeff QPoly::coeff(QExp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

QExp QPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

QExp QPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void QPoly::add_term(QExp e, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  // Iterate the smaller factor on the outside to keep map churn low.
  const QPoly& s = (a.term_count() <= b.term_count()) ? a : b;
  const QPoly& l = (a.term_count() <= b.term_count()) ? b : a;
  for (const auto& [ea, ca] : s.terms_) {
    for (const auto& [eb, cb] : l.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

QPoly QPoly::shifted(QExp e) const {
  QPoly out;
  for (const auto& [x, c] : terms_) out.terms_.emplace(x + e, c);
  return out;
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("div_exact: division by zero");
  if (a.is_zero()) return QPoly::zero();
  // Eliminate lowest terms.  For an exact division the quotient exponents
  // are bounded by max(a) - max(b); exceeding that bound means the
  // remainder will never cancel.
  QExp qmax = a.max_exponent() - b.max_exponent();
  QExp blow = b.min_exponent();
  const Coeff& blead = b.terms().begin()->second;
  QPoly rem = a;
  QPoly quot;
  while (!rem.is_zero()) {
    QExp e = rem.min_exponent() - blow;
    if (e > qmax) throw std::domain_error("div_exact: not divisible");
    Coeff c = rem.terms().begin()->second;
    if (c % blead != 0) throw std::domain_error("div_exact: not divisible");
    c /= blead;
    quot.add_term(e, c);
    for (const auto& [eb, cb] : b.terms()) rem.add_term(e + eb, -c * cb);
  }
  return quot;
}

QPoly QPoly::div_one_minus_qpow(QExp e) const {
  if (e.eighths <= 0) throw std::domain_error("div_one_minus_qpow: need positive exponent");
  if (is_zero()) return QPoly::zero();
  // Quotient Q of A/(1 - q^e) satisfies Q(x) = A(x) + Q(x - e); sweep the
  // working map in ascending exponent order, propagating each confirmed
  // quotient coefficient up by e.
  QExp amax = max_exponent();
  TermMap work = terms_;
  QPoly quot;
  while (!work.empty()) {
    auto it = work.begin();
    QExp x = it->first;
    Coeff c = std::move(it->second);
    work.erase(it);
    if (c == 0) continue;
    if (x > amax) throw std::domain_error("div_one_minus_qpow: not divisible");
    quot.add_term(x, c);
    auto [jt, inserted] = work.try_emplace(x + e, c);
    if (!inserted) jt->second += c;
  }
  return quot;
}

QPoly QPoly::substitute_power(std::int64_t num, std::int64_t den) const {
  if (den <= 0 || num == 0) throw std::domain_error("substitute_power: bad exponent ratio");
  QPoly out;
  for (const auto& [e, c] : terms_) {
    std::int64_t scaled = e.eighths * num;
    if (scaled % den != 0) {
      throw std::domain_error("substitute_power: exponent leaves (1/8)Z");
    }
    out.terms_.emplace(QExp(scaled / den), c);
  }
  return out;
}

QPoly QPoly::truncated(QExp order) const {
  QPoly out;
  for (const auto& [e, c] : terms_) {
    if (e > order) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

Coeff QPoly::eval_at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff abs = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (abs == 1);
    if (!unit || e.eighths == 0) os << abs.str();
    if (e.eighths != 0) {
      if (!unit) os << "*";
      os << "q^" << e.str();
    }
  }
  return os.str();
}

void to_json(nlohmann::json& j, const QPoly& p) {
  j = nlohmann::json::object();
  j["den"] = 8;
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(nlohmann::json::array({e.eighths, c.str()}));
  }
  j["terms"] = std::move(terms);
}

void from_json(const nlohmann::json& j, QPoly& p) {
  if (j.at("den").get<int>() != 8) throw std::domain_error("QPoly json: unsupported denominator");
  p = QPoly();
  for (const auto& t : j.at("terms")) {
    QExp e(t.at(0).get<std::int64_t>());
    Coeff c(t.at(1).get<std::string>());
    p.add_term(e, c);
  }
}

}  // namespace qvir
