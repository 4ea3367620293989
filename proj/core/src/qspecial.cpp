#include "qvir/qspecial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace qvir {

namespace {

// (q)_L / ((q)_{i1} (q)_{i2} ... ): multiply the factors above the largest
// denominator index, then peel the remaining denominators off with the
// linear-time (1 - q^i) division.  Every intermediate stays a polynomial.
QPoly pochhammer_ratio(int L, std::vector<int> denom) {
  for (int idx : denom) {
    if (idx < 0) throw std::domain_error("pochhammer_ratio: negative index");
  }
  auto mx = std::max_element(denom.begin(), denom.end());
  int top = (mx == denom.end()) ? 0 : *mx;
  if (mx != denom.end()) denom.erase(mx);
  QPoly out = QPoly::one();
  for (int i = top + 1; i <= L; ++i) out *= QPoly::one_minus_qpow(QExp::integer(i));
  for (int idx : denom) {
    for (int i = 1; i <= idx; ++i) out = out.div_one_minus_qpow(QExp::integer(i));
  }
  return out;
}

std::string fmt_ndl(int n, int d, int L) {
  std::ostringstream os;
  os << "n=" << n << " d=" << d << " L=" << L;
  return os.str();
}

}  // namespace

QPoly q_pochhammer(int n) {
  if (n < 0) throw std::domain_error("q_pochhammer: negative index");
  QPoly out = QPoly::one();
  for (int i = 1; i <= n; ++i) out *= QPoly::one_minus_qpow(QExp::integer(i));
  return out;
}

TruncatedSeries inv_pochhammer_truncated(QExp order) {
  std::int64_t n = order.eighths >= 0 ? order.eighths / 8 : -1;
  return inv_pochhammer_finite_truncated(static_cast<int>(n < 0 ? 0 : n), order);
}

TruncatedSeries inv_pochhammer_finite_truncated(int n, QExp order) {
  if (n < 0) throw std::domain_error("inv_pochhammer_finite_truncated: negative index");
  std::int64_t top = order.eighths >= 0 ? order.eighths / 8 : -1;
  if (top < 0) return TruncatedSeries(QPoly::zero(), order);
  // Partitions into parts <= n, by the usual one-part-size-at-a-time DP.
  std::vector<Coeff> a(static_cast<std::size_t>(top) + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= n && i <= top; ++i) {
    for (std::int64_t j = i; j <= top; ++j) a[j] += a[j - i];
  }
  QPoly p;
  for (std::int64_t j = 0; j <= top; ++j) p.add_term(QExp::integer(j), a[j]);
  return TruncatedSeries(p, order);
}

QPoly q_binomial(int n, int m) {
  if (n < 0 || m < 0) return QPoly::zero();
  return pochhammer_ratio(n + m, {n, m});
}

QPoly q_binomial_modified(int n, int m) {
  if (n == 0 && m == -1) return QPoly::one();
  return q_binomial(n, m);
}

QPoly q_binomial_base(int n, int m, int base) {
  if (base <= 0) throw std::domain_error("q_binomial_base: base must be positive");
  return q_binomial(n, m).substitute_power(base, 1);
}

QPoly q_binomial_modified_base(int n, int m, int base) {
  if (base <= 0) throw std::domain_error("q_binomial_modified_base: base must be positive");
  return q_binomial_modified(n, m).substitute_power(base, 1);
}

QPoly q_trinomial(int n, int d, int L) {
  if (L < 0) throw std::domain_error("q_trinomial: negative L");
  if (std::abs(d) > L) return QPoly::zero();
  if (d < 0) {
    // reflection law: T(n; d; L) = q^{n d} T(n; -d; L) for d < 0
    return q_trinomial(n, -d, L).shifted(QExp::integer(static_cast<std::int64_t>(n) * d));
  }
  QPoly total;
  for (int k = 0; 2 * k <= L - d; ++k) {
    QPoly term = pochhammer_ratio(L, {k, k + d, L - 2 * k - d});
    total += term.shifted(QExp::integer(static_cast<std::int64_t>(k) * (k + d - n)));
  }
  return total;
}

QPoly q_trinomial_alt(int n, int d, int L) {
  if (L < 0) throw std::domain_error("q_trinomial_alt: negative L");
  if (std::abs(d) > L) return QPoly::zero();
  QPoly total;
  for (int r = 0; r <= L - std::abs(d); ++r) {
    if ((L - d - r) % 2 != 0) continue;
    QPoly term = pochhammer_ratio(L, {(L - d - r) / 2, (L + d - r) / 2, r});
    std::int64_t num = static_cast<std::int64_t>(L - n - r) * (L - n - r) -
                       static_cast<std::int64_t>(d - n) * (d - n);
    total += term.shifted(QExp::quarter(num));
  }
  return total;
}

Coeff trinomial_walk_count(int d, int L) {
  if (L < 0) throw std::domain_error("trinomial_walk_count: negative L");
  // counts[j] = walks of displacement j - L after the current step count
  std::vector<Coeff> counts(2 * static_cast<std::size_t>(L) + 1, 0);
  counts[L] = 1;
  for (int step = 0; step < L; ++step) {
    std::vector<Coeff> next(counts.size(), 0);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] == 0) continue;
      next[j] += counts[j];
      if (j > 0) next[j - 1] += counts[j];
      if (j + 1 < counts.size()) next[j + 1] += counts[j];
    }
    counts = std::move(next);
  }
  if (d < -L || d > L) return 0;
  return counts[static_cast<std::size_t>(d + L)];
}

Report verify_trinomial_identities(int nmax, int dmax, int lmax) {
  Report rep;
  std::map<std::tuple<int, int, int>, QPoly> cache;
  auto T = [&cache](int n, int d, int L) -> const QPoly& {
    auto key = std::make_tuple(n, d, L);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, q_trinomial(n, d, L)).first;
    return it->second;
  };
  auto qp = [](std::int64_t e) { return QPoly::monomial(QExp::integer(e), 1); };
  auto record = [&rep](const std::string& id, const std::string& idx, bool ok) {
    rep.push_back({id, idx, ok, ""});
  };

  for (int n = 0; n <= nmax; ++n) {
    for (int d = -dmax; d <= dmax; ++d) {
      for (int L = 0; L <= lmax; ++L) {
        record("trinomial/closed-forms-agree", fmt_ndl(n, d, L),
               T(n, d, L) == q_trinomial_alt(n, d, L));
        if (d >= 0) {
          record("trinomial/reflection", fmt_ndl(n, d, L),
                 T(n, -d, L) == T(n, d, L).shifted(QExp::integer(-static_cast<std::int64_t>(n) * d)));
        }
        record("trinomial/walk-count-at-q1", fmt_ndl(n, d, L),
               T(n, d, L).eval_at_one() == trinomial_walk_count(d, L));
        if (L >= 1) {
          bool r1 = T(n, d, L) == qp(L - d) * T(n + 1, d - 1, L - 1) + T(n, d, L - 1) +
                                      qp(L + d - n) * T(n, d + 1, L - 1);
          bool r2 = T(n, d, L) == qp(L - d) * T(n, d - 1, L - 1) + T(n - 1, d, L - 1) +
                                      qp(d - n + 1) * T(n - 1, d + 1, L - 1);
          bool r3 = T(n, d, L) == qp(L - d) * T(n, d - 1, L - 1) + T(n, d, L - 1) +
                                      qp(L - n - 1) * T(n + 1, d + 1, L - 1);
          bool r4 = T(n, d, L) == T(n - 1, d - 1, L - 1) + qp(d) * T(n - 1, d, L - 1) +
                                      qp(L + d - n) * T(n, d + 1, L - 1);
          record("trinomial/step-recurrence-1", fmt_ndl(n, d, L), r1);
          record("trinomial/step-recurrence-2", fmt_ndl(n, d, L), r2);
          record("trinomial/step-recurrence-3", fmt_ndl(n, d, L), r3);
          record("trinomial/step-recurrence-4", fmt_ndl(n, d, L), r4);
        }
        bool p1 = qp(L + 1 - d) * T(n + 1, d - 1, L) + T(n, d, L) ==
                  T(n - 1, d - 1, L) + qp(d) * T(n - 1, d, L);
        bool p2 = qp(L - n) * T(n + 1, d + 1, L) + T(n, d, L) ==
                  qp(d - n + 1) * T(n - 1, d + 1, L) + T(n - 1, d, L);
        bool p3 = T(n, d + 1, L) + qp(L - d) * T(n + 1, d, L) ==
                  qp(L) * T(n + 1, d + 1, L) + qp(n) * T(n, d, L) +
                      (QPoly::one() - qp(n)) * T(n - 1, d, L);
        record("trinomial/pair-recurrence-1", fmt_ndl(n, d, L), p1);
        record("trinomial/pair-recurrence-2", fmt_ndl(n, d, L), p2);
        record("trinomial/pair-recurrence-3", fmt_ndl(n, d, L), p3);
      }
    }
  }
  return rep;
}

Report verify_trinomial_limits(int nmax, int dmax, std::int64_t order) {
  Report rep;
  QExp ord = QExp::integer(order);
  int L = static_cast<int>(2 * order);
  TruncatedSeries invp = inv_pochhammer_truncated(ord);
  auto trunc = [ord](const QPoly& p) { return TruncatedSeries(p, ord); };
  auto record = [&rep](const std::string& id, const std::string& idx, bool ok) {
    rep.push_back({id, idx, ok, ""});
  };

  for (int d = 0; d <= dmax; ++d) {
    // Stabilization: the truncation must agree at both L and L+1 before we
    // accept it as the limit.
    bool a9 = agree(trunc(q_trinomial(0, d, L)), invp) &&
              agree(trunc(q_trinomial(0, d, L + 1)), invp);
    record("trinomial/limit-depth0", fmt_ndl(0, d, L), a9);

    QPoly onepqd = QPoly::one() + QPoly::monomial(QExp::integer(d), 1);
    TruncatedSeries rhs11 = TruncatedSeries(onepqd, ord) * invp;
    bool a11 = agree(trunc(q_trinomial(1, d, L)), rhs11) &&
               agree(trunc(q_trinomial(1, d, L + 1)), rhs11);
    record("trinomial/limit-depth1", fmt_ndl(1, d, L), a11);

    for (int n = 0; n <= nmax; ++n) {
      // Deeper coefficients stabilize later, so push L out with the depth.
      auto check = [&](int LL) {
        TruncatedSeries lhs = trunc(q_trinomial(n + 1, d, LL));
        TruncatedSeries rhs =
            trunc(q_trinomial(n, d - 1, LL) +
                  q_trinomial(n, d, LL).shifted(QExp::integer(d)));
        return agree(lhs, rhs);
      };
      int Ln = L + 2 * (n + 1);
      record("trinomial/limit-depth-recurrence", fmt_ndl(n, d, Ln), check(Ln) && check(Ln + 1));
    }
  }
  return rep;
}

}  // namespace qvir
