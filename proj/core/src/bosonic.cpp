#include "qvir/bosonic.hpp"

#include <algorithm>
#include <sstream>

#include "qvir/paths.hpp"
#include "qvir/qspecial.hpp"

namespace qvir {

namespace {

// [L choose k]_q, the Gaussian binomial in "choose" indexing.
QPoly gauss(int L, std::int64_t k) {
  if (k < 0 || k > L) return QPoly::zero();
  return q_binomial(static_cast<int>(k), static_cast<int>(L - k));
}

std::string fmt(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

}  // namespace

TruncatedSeries rocha_caridi(int p2, int pprime, int r2, int s, QExp order) {
  if (p2 < 1 || pprime < 1 || s < 1 || r2 < 0) {
    throw std::invalid_argument("rocha_caridi: bad parameters");
  }
  // Exponents, in eighths: 8*(lambda^2 p p' + lambda(p' r - p s)) and
  // 8*(lambda p + r)(lambda p' + s), with p = p2/2, r = r2/2.
  auto exp1 = [&](std::int64_t l) {
    return 4 * l * l * p2 * pprime + 4 * l * (static_cast<std::int64_t>(pprime) * r2 - static_cast<std::int64_t>(p2) * s);
  };
  auto exp2 = [&](std::int64_t l) {
    return 4 * (l * p2 + r2) * (l * pprime + s);
  };
  QPoly window;
  for (int dir : {+1, -1}) {
    int consec = 0;
    for (std::int64_t l = (dir > 0 ? 0 : -1); consec < 2; l += dir) {
      std::int64_t e1 = exp1(l), e2 = exp2(l);
      if (e1 <= order.eighths) window.add_term(QExp(e1), 1);
      if (e2 <= order.eighths) window.add_term(QExp(e2), -1);
      if (e1 > order.eighths && e2 > order.eighths) ++consec;
      else consec = 0;
    }
  }
  if (window.is_zero()) return TruncatedSeries(QPoly::zero(), order);
  std::int64_t low = std::min<std::int64_t>(0, window.min_exponent().eighths);
  QPoly inv = inv_pochhammer_truncated(QExp(order.eighths - low)).poly;
  return TruncatedSeries(window * inv, order);
}

QPoly abf_bosonic_finitized(int band, int a, int b, int e, int f, int L) {
  if (band < 1 || a < 1 || a > band || b < 1 || b > band) {
    throw std::invalid_argument("abf_bosonic_finitized: endpoint out of band");
  }
  if ((e != 0 && e != 1) || (f != 0 && f != 1) || L < 0) {
    throw std::invalid_argument("abf_bosonic_finitized: bad flags or length");
  }
  if ((L + a - b) % 2 != 0) return QPoly::zero();
  const std::int64_t p = band;
  QPoly sum;
  const int span = L / (band + 1) + 2;
  for (std::int64_t l = -span; l <= span; ++l) {
    std::int64_t k1 = (L + a - b) / 2 - (p + 1) * l;
    if (k1 >= 0 && k1 <= L) {
      std::int64_t x = l * (p + 1) * (l * p + b - f) - l * p * a;
      sum += gauss(L, k1).shifted(QExp::integer(x));
    }
    std::int64_t k2 = (L - a - b) / 2 - (p + 1) * l;
    if (k2 >= 0 && k2 <= L) {
      std::int64_t x = (l * p + b - f) * (l * (p + 1) + a);
      sum -= gauss(L, k2).shifted(QExp::integer(x));
    }
  }
  // prefactor q^{(a-b)(a-b-1+2f)/4}
  return sum.shifted(QExp::quarter(static_cast<std::int64_t>(a - b) * (a - b - 1 + 2 * f)));
}

QPoly y_polynomial(int n, int t2, int a, int b, int L) {
  if (t2 < 3 || L < 0) throw std::invalid_argument("y_polynomial: bad parameters");
  const std::int64_t tp = t2 + 1;  // 2t + 1
  // hull of lambdas where either trinomial displacement lies in [-L, L]
  std::int64_t lo = std::min<std::int64_t>((a - b - L - tp + 1) / tp, (-a - b - L - tp + 1) / tp) - 1;
  std::int64_t hi = std::max<std::int64_t>((a - b + L) / tp, (-a - b + L) / tp) + 1;
  QPoly sum;
  for (std::int64_t l = lo; l <= hi; ++l) {
    std::int64_t d1 = a - b - tp * l;
    if (std::llabs(d1) <= L) {
      std::int64_t x = 4 * l * l * t2 * tp + 8 * l * (tp * b - static_cast<std::int64_t>(t2) * a);
      sum += q_trinomial(n, static_cast<int>(d1), L).shifted(QExp(x));
    }
    std::int64_t d2 = -a - b - tp * l;
    if (std::llabs(d2) <= L) {
      std::int64_t x = 4 * (l * t2 + 2 * b) * (l * tp + 2 * a);
      sum -= q_trinomial(n, static_cast<int>(d2), L).shifted(QExp(x));
    }
  }
  return sum;
}

namespace {

// eighths of (a-b)(a-b-1/2)/2
std::int64_t endpoint_prefactor8(int a, int b) {
  std::int64_t d = a - b;
  return 2 * d * (2 * d - 1);
}

}  // namespace

QPoly half_bosonic_extended(int t2, int a, int b, int e, int f, int L) {
  if ((e != 0 && e != 1) || (f != 0 && f != 1) || L < 0) {
    throw std::invalid_argument("half_bosonic_extended: bad flags or length");
  }
  (void)e;  // the generating function does not depend on e
  return y_polynomial(f, t2, a, b, L)
      .shifted(QExp(endpoint_prefactor8(a, b) + 4LL * f * L));
}

QPoly half_bosonic_finitized(int t2, int a, int b2, int e, int f, int L2) {
  if (t2 < 4) throw std::invalid_argument("half_bosonic_finitized: band too small");
  if (a < 1 || 2 * a > t2 || b2 < 2 || b2 > t2) {
    throw std::invalid_argument("half_bosonic_finitized: endpoint out of band");
  }
  if ((e != 0 && e != 1) || (f != 0 && f != 1) || L2 < 0) {
    throw std::invalid_argument("half_bosonic_finitized: bad flags or length");
  }
  if ((b2 + L2) % 2 != 0) return QPoly::zero();  // endpoint unreachable
  if (b2 % 2 == 0) {
    return half_bosonic_extended(t2, a, b2 / 2, e, f, L2 / 2);
  }
  // half-integer b = c + 1/2, half-integer length L = M + 1/2
  const int c = (b2 - 1) / 2;
  const int M = (L2 - 1) / 2;
  if (f == 0) {
    return y_polynomial(0, t2, a, c, M)
        .shifted(QExp(endpoint_prefactor8(a, c) + 4LL * M + 2));
  }
  QPoly first = y_polynomial(0, t2, a, c, M).shifted(QExp(endpoint_prefactor8(a, c)));
  std::int64_t d = a - c;
  QPoly second = y_polynomial(1, t2, a, c + 1, M)
                     .shifted(QExp(8LL * (M + 1) + 2 * d * (2 * d - 5)));
  return first + second;
}

Report verify_bosonic_recurrences(int t2, int lmax) {
  Report rep;
  const int tf = t2 / 2;  // floor(t)
  auto qp = [](std::int64_t e8) { return QPoly::monomial(QExp(e8), 1); };
  // enumerated where the endpoint is in the band, analytic extension outside
  auto H = [&](int e, int f, int a, int b, int L) {
    if (b >= 1 && 2 * b <= t2) return gf_half(t2, 2 * a, 2 * b, e, f, 2 * L);
    return half_bosonic_extended(t2, a, b, e, f, L);
  };
  auto rec = [&rep](const std::string& id, const std::string& idx, bool ok) {
    rep.push_back({id, idx, ok, ""});
  };

  for (int e = 0; e <= 1; ++e) {
    for (int a = 1; a <= tf; ++a) {
      // length-0 initial condition
      for (int f = 0; f <= 1; ++f) {
        for (int b = 1; b <= tf; ++b) {
          QPoly gf0 = gf_half(t2, 2 * a, 2 * b, e, f, 0);
          rec("half/initial-condition", fmt({{"t2", t2}, {"e", e}, {"f", f}, {"a", a}, {"b", b}}),
              gf0 == (a == b ? QPoly::one() : QPoly::zero()));
        }
      }
      for (int L = 1; L <= lmax; ++L) {
        for (int b = 1; b <= tf; ++b) {
          auto idx = fmt({{"t2", t2}, {"e", e}, {"a", a}, {"b", b}, {"L", L}});
          QPoly lhs0 = H(e, 0, a, b, L);
          QPoly rhs0 = qp(8LL * L - 2) * H(e, 0, a, b - 1, L - 1) + H(e, 0, a, b, L - 1) +
                       qp(4LL * L - 2) * H(e, 1, a, b + 1, L - 1);
          rec("half/length-recurrence-f0", idx, lhs0 == rhs0);

          QPoly lhs1 = H(e, 1, a, b, L);
          QPoly rhs1 = qp(4LL * L - 2) * H(e, 0, a, b - 1, L - 1) + qp(4LL * L) * H(e, 0, a, b, L - 1) +
                       qp(8LL * L - 2) * H(e, 1, a, b + 1, L - 1);
          rec("half/length-recurrence-f1", idx, lhs1 == rhs1);
        }
        // half-step recurrences, half-integer upper endpoint b + 1/2
        for (int Li = 0; Li < L; ++Li) {
          for (int b = 1; 2 * b + 1 <= t2; ++b) {
            auto idx = fmt({{"t2", t2}, {"e", e}, {"a", a}, {"b", b}, {"L", Li}});
            QPoly lhs = gf_half(t2, 2 * a, 2 * b + 1, e, 1, 2 * Li + 1);
            QPoly rhs = gf_half(t2, 2 * a, 2 * b, e, 0, 2 * Li) +
                        qp(4LL * Li + 2) * H(e, 1, a, b + 1, Li);
            rec("half/half-step-recurrence-f1", idx, lhs == rhs);

            QPoly lhs2 = gf_half(t2, 2 * a, 2 * b + 1, e, 0, 2 * Li + 1);
            QPoly rhs2 = qp(4LL * Li + 2) * gf_half(t2, 2 * a, 2 * b, e, 0, 2 * Li);
            rec("half/half-step-recurrence-f0", idx, lhs2 == rhs2);
          }
        }
        // boundary vanishing
        auto idx = fmt({{"t2", t2}, {"e", e}, {"a", a}, {"L", L}});
        rec("half/lower-boundary-vanishing", idx, y_polynomial(0, t2, a, 0, L).is_zero());
        if (t2 % 2 != 0) {
          rec("half/upper-boundary-vanishing", idx,
              y_polynomial(1, t2, a, (t2 + 1) / 2, L).is_zero());
        } else {
          const int t = t2 / 2;
          QPoly combo = gf_half(t2, 2 * a, t2, e, 0, 2 * L) +
                        qp(4LL * L + 2) * half_bosonic_extended(t2, a, t + 1, e, 1, L);
          rec("half/upper-boundary-switch", idx, combo.is_zero());
          QPoly ycombo = y_polynomial(0, t2, a, t, L) +
                         qp(8LL * (L + 1 - a + t)) * y_polynomial(1, t2, a, t + 1, L);
          rec("half/upper-boundary-switch-y", idx, ycombo.is_zero());
        }
        // trinomial-sum recurrences in both directions
        for (int b = 1; b <= tf; ++b) {
          for (int n = 0; n <= 1; ++n) {
            auto yidx = fmt({{"t2", t2}, {"n", n}, {"a", a}, {"b", b}, {"L", L}});
            QPoly lhs = y_polynomial(n, t2, a, b, L);
            QPoly rhs = qp(8LL * (L + a - b - n)) * y_polynomial(n, t2, a, b - 1, L - 1) +
                        y_polynomial(n, t2, a, b, L - 1) +
                        qp(8LL * (L - a + b)) * y_polynomial(n + 1, t2, a, b + 1, L - 1);
            rec("half/depth-preserving-recurrence", yidx, lhs == rhs);

            QPoly rhs2 = qp(8LL * (a - b - n)) * y_polynomial(n, t2, a, b - 1, L - 1) +
                         y_polynomial(n, t2, a, b, L - 1) +
                         qp(8LL * (L - a + b)) * y_polynomial(n + 1, t2, a, b + 1, L - 1);
            // depth-shifting form, stated for depth n+1
            QPoly lhs2 = y_polynomial(n + 1, t2, a, b, L);
            QPoly rhs3 = qp(8LL * (a - b - n)) * y_polynomial(n, t2, a, b - 1, L - 1) +
                         y_polynomial(n, t2, a, b, L - 1) +
                         qp(8LL * (L - a + b)) * y_polynomial(n + 1, t2, a, b + 1, L - 1);
            rec("half/depth-shifting-recurrence", yidx, lhs2 == rhs3);
            (void)rhs2;
          }
        }
      }
    }
  }
  return rep;
}

Report y_limits_check(int t2, std::int64_t order) {
  Report rep;
  const int tf = t2 / 2;
  const QExp ord = QExp::integer(order);
  const int L = static_cast<int>(2 * order);
  for (int a = 1; a <= tf; ++a) {
    for (int b = 1; b <= tf; ++b) {
      TruncatedSeries chi_b = rocha_caridi(t2, t2 + 1, 2 * b, 2 * a, QExp(ord.eighths + 8LL * std::abs(a - b)));
      bool ok0 = true, ok1 = true;
      for (int LL : {L, L + 1}) {
        TruncatedSeries y0(y_polynomial(0, t2, a, b, LL), ord);
        ok0 = ok0 && agree(y0, TruncatedSeries(chi_b.poly, ord));

        TruncatedSeries y1(y_polynomial(1, t2, a, b, LL), ord);
        TruncatedSeries chi_bm1 =
            rocha_caridi(t2, t2 + 1, 2 * (b - 1), 2 * a, QExp(ord.eighths + 8LL * std::abs(a - b) + 8));
        QPoly rhs = chi_b.poly + chi_bm1.poly.shifted(QExp::integer(a - b));
        ok1 = ok1 && agree(y1, TruncatedSeries(rhs, ord));
      }
      rep.push_back({"half/depth0-limit", fmt({{"t2", t2}, {"a", a}, {"b", b}}), ok0, ""});
      rep.push_back({"half/depth1-limit", fmt({{"t2", t2}, {"a", a}, {"b", b}}), ok1, ""});
    }
  }
  return rep;
}

}  // namespace qvir
