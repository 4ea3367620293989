#include "qvir/fermionic.hpp"

#include <climits>
#include <cmath>
#include <functional>
#include <sstream>

#include "qvir/bosonic.hpp"
#include "qvir/qspecial.hpp"

namespace qvir {

namespace {

std::int64_t pabs(std::int64_t x) { return x > 0 ? x : 0; }

// One row of the four-case data: the distinguished index ell of the linear
// exponent term, and the background vector Delta_0 .. Delta_{p-1}.
struct Row {
  int ell = 0;
  std::vector<std::int64_t> delta;
};

// Row selection for the finitized sums, keyed by the boundary flags:
// (e,f) = (1,1) -> a, (0,1) -> b, (0,0) -> c, (1,0) -> d.
Row finitized_row(int p, int a, int b, int e, int f) {
  Row row;
  row.delta.resize(p);
  auto excluded = [&](const char* which) {
    std::ostringstream os;
    os << "finitized sum: case " << which << " excludes these endpoints (band=" << p
       << " a=" << a << " b=" << b << ")";
    throw ExcludedCaseError(os.str());
  };
  if (e == 1 && f == 1) {
    if (a == 1 || b == 1) excluded("a");
    row.ell = a - 1;
    for (int i = 0; i < p; ++i) row.delta[i] = pabs(a - 1 - i) + pabs(b - 1 - i);
  } else if (e == 0 && f == 1) {
    if (a == p || b == 1) excluded("b");
    row.ell = p - a;
    for (int i = 0; i < p; ++i) row.delta[i] = pabs(p - a - i) + pabs(b - 1 - i) + (p - 1 - i);
  } else if (e == 0 && f == 0) {
    if (a == p || b == p) excluded("c");
    row.ell = p - a;
    for (int i = 0; i < p; ++i) row.delta[i] = pabs(p - a - i) + pabs(p - b - i);
  } else {
    if (a == 1 || b == p) excluded("d");
    row.ell = a - 1;
    for (int i = 0; i < p; ++i) row.delta[i] = pabs(a - 1 - i) + pabs(p - b - i) + (p - 1 - i);
  }
  return row;
}

// Enumerate n_k >= 0 for k in [kmin, kmax] with sum k*n_k == total.
void species_rec(int k, int kmin, std::int64_t rem, std::vector<std::int64_t>& n,
                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (k < kmin) {
    if (rem == 0) fn(n);
    return;
  }
  if (k == kmin) {
    if (rem % kmin == 0) {
      n[k] = rem / kmin;
      fn(n);
      n[k] = 0;
    }
    return;
  }
  for (std::int64_t c = 0; c * k <= rem; ++c) {
    n[k] = c;
    species_rec(k - 1, kmin, rem - c * k, n, fn);
  }
  n[k] = 0;
}

void for_each_species(int kmax, int kmin, std::int64_t total, std::vector<std::int64_t>& n,
                      const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (kmax < kmin) {
    if (total == 0) fn(n);
    return;
  }
  species_rec(kmax, kmin, total, n, fn);
}

// m_i = 2 sum_{k > i} (k - i) n_k - Delta_i for i = 0 .. top; n is indexed
// 1 .. top (n[0] unused).
std::vector<std::int64_t> m_from(const std::vector<std::int64_t>& n,
                                 const std::vector<std::int64_t>& delta, int top) {
  std::vector<std::int64_t> m(top + 1);
  std::int64_t s1 = 0, s2 = 0;
  for (int i = top; i >= 0; --i) {
    m[i] = 2 * (s2 - static_cast<std::int64_t>(i) * s1) - delta[i];
    if (i >= 1) {
      s1 += n[i];
      s2 += static_cast<std::int64_t>(i) * n[i];
    }
  }
  return m;
}

// m C m^T for the A-type quadratic form over m[lo..hi].
std::int64_t quad_form(const std::vector<std::int64_t>& m, int lo, int hi) {
  std::int64_t q = 0;
  for (int i = lo; i <= hi; ++i) q += 2 * m[i] * m[i];
  for (int i = lo; i < hi; ++i) q -= 2 * m[i] * m[i + 1];
  return q;
}

void check_flags(int e, int f, int L) {
  if ((e != 0 && e != 1) || (f != 0 && f != 1) || L < 0) {
    throw std::invalid_argument("fermionic sum: bad flags or length");
  }
}

// Shared evaluator for the two parity-corrected sums.  With half the
// exponents carry half their usual size (the half-lattice normalization);
// binomials are base q^2 for the full-size sum and base q for the halved one.
QPoly restricted_core(int p, int a, int b, int e, int f, int L, bool half,
                      const FermionicOptions& opt) {
  Row row = finitized_row(p, a, b, e, f);
  std::vector<int> tl = (e == 1) ? parity_q(a, p - 1) : parity_r(a, p - 1);
  std::vector<int> tr = (f == 1) ? parity_q(b, p - 1) : parity_r(b, p - 1);

  std::int64_t total2 = L + row.delta[0];
  if (total2 % 2 != 0) return QPoly::zero();

  QPoly acc;
  std::vector<std::int64_t> n(p, 0);
  for_each_species(p - 1, 1, total2 / 2, n, [&](const std::vector<std::int64_t>& nn) {
    auto m = m_from(nn, row.delta, p - 1);
    std::int64_t ntr = 0;
    for (int i = 1; i <= p - 1; ++i) ntr += nn[i] * tr[i - 1];

    QPoly prod = QPoly::one();
    std::vector<int> specials;
    bool zero = false;
    for (int i = 1; i <= p - 2 && !zero; ++i) {
      std::int64_t d = m[i] - tl[i - 1] - tr[i - 1];
      if (((d % 2) + 2) % 2 != 0) {
        throw std::logic_error("restricted fermionic sum: fractional species count");
      }
      std::int64_t mh = d / 2;
      if (nn[i] == 0 && mh == -1) {
        if (opt.plain_binomials) {
          zero = true;  // the plain binomial vanishes here
        } else {
          specials.push_back(i);  // the modified binomial contributes 1
        }
        continue;
      }
      if (mh < 0) {
        zero = true;
        continue;
      }
      QPoly factor = half ? q_binomial(static_cast<int>(nn[i]), static_cast<int>(mh))
                          : q_binomial_base(static_cast<int>(nn[i]), static_cast<int>(mh), 2);
      if (factor.is_zero()) {
        zero = true;
        continue;
      }
      prod = prod * factor;
    }
    if (zero) return;

    std::int64_t mcm = quad_form(m, 1, p - 2);
    std::int64_t e8 = half ? (mcm - 2 * m[row.ell] + 4 * ntr)
                           : (2 * mcm - 4 * m[row.ell] + 8 * ntr);
    acc += prod.shifted(QExp(e8));
    if (opt.fired) opt.fired->insert(specials.begin(), specials.end());
  });
  return acc;
}

}  // namespace

std::vector<int> parity_q(int c, int j) {
  if (j < 0 || c < 1 || c > j + 1) throw std::invalid_argument("parity_q: bad parameters");
  std::vector<int> v(j);
  for (int i = 1; i <= j; ++i) v[i - 1] = static_cast<int>(pabs(c - 1 - i) % 2);
  return v;
}

std::vector<int> parity_r(int c, int j) {
  if (j < 0 || c < 1 || c > j + 1) throw std::invalid_argument("parity_r: bad parameters");
  std::vector<int> v(j);
  for (int i = 1; i <= j; ++i) v[i - 1] = static_cast<int>((pabs(i + c - j - 1) + c + 1) % 2);
  return v;
}

QPoly melzer_finitized(int band, int a, int b, int e, int f, int L) {
  const int p = band;
  if (p < 2 || a < 1 || a > p || b < 1 || b > p) {
    throw std::invalid_argument("melzer_finitized: endpoint out of band");
  }
  check_flags(e, f, L);
  Row row = finitized_row(p, a, b, e, f);

  std::int64_t total2 = L + row.delta[0];
  if (total2 % 2 != 0) return QPoly::zero();

  QPoly acc;
  std::vector<std::int64_t> n(p, 0);
  for_each_species(p - 1, 1, total2 / 2, n, [&](const std::vector<std::int64_t>& nn) {
    auto m = m_from(nn, row.delta, p - 1);
    QPoly prod = QPoly::one();
    for (int i = 1; i <= p - 2; ++i) {
      if (m[i] < 0) return;
      prod = prod * q_binomial(static_cast<int>(nn[i]), static_cast<int>(m[i]));
      if (prod.is_zero()) return;
    }
    std::int64_t e8 = 2 * quad_form(m, 1, p - 2) - 4 * m[row.ell];
    acc += prod.shifted(QExp(e8));
  });
  return acc;
}

QPoly rabf_finitized(int band, int a, int b, int e, int f, int L) {
  return rabf_finitized_opt(band, a, b, e, f, L, FermionicOptions{});
}

QPoly rabf_finitized_opt(int band, int a, int b, int e, int f, int L,
                         const FermionicOptions& opt) {
  if (band < 2 || a < 1 || a > band || b < 1 || b > band) {
    throw std::invalid_argument("rabf_finitized: endpoint out of band");
  }
  check_flags(e, f, L);
  return restricted_core(band, a, b, e, f, L, /*half=*/false, opt);
}

QPoly hl_finitized(int t2, int a2, int b2, int e, int f, int L2) {
  return hl_finitized_opt(t2, a2, b2, e, f, L2, FermionicOptions{});
}

QPoly hl_finitized_opt(int t2, int a2, int b2, int e, int f, int L2,
                       const FermionicOptions& opt) {
  if (t2 < 4 || a2 < 2 || a2 > t2 || b2 < 2 || b2 > t2) {
    throw std::invalid_argument("hl_finitized: endpoint out of band");
  }
  check_flags(e, f, L2);
  // Doubled heights turn the half-lattice data into band t2-1 data with
  // endpoints a2-1, b2-1, doubled length, and halved exponents.
  return restricted_core(t2 - 1, a2 - 1, b2 - 1, e, f, L2, /*half=*/true, opt);
}

namespace {

Row melzer_char_row(int p, int r, int s, char case_row) {
  Row row;
  row.delta.resize(p);
  auto excluded = [&]() {
    std::ostringstream os;
    os << "character case " << case_row << " excludes r=" << r << " s=" << s << " (band=" << p
       << ")";
    throw ExcludedCaseError(os.str());
  };
  switch (case_row) {
    case 'a':
      if (r == 1 || s == 1) excluded();
      row.ell = s - 1;
      for (int i = 0; i < p; ++i) row.delta[i] = pabs(s - 1 - i) + pabs(r - i);
      break;
    case 'b':
      if (r == 1 || s == p) excluded();
      row.ell = p - s;
      for (int i = 0; i < p; ++i) row.delta[i] = pabs(p - s - i) + pabs(r - i) + (p - 1 - i);
      break;
    case 'c':
      if (r == p - 1 || s == p) excluded();
      row.ell = p - s;
      for (int i = 0; i < p; ++i) row.delta[i] = pabs(p - s - i) + pabs(p - r - i);
      break;
    case 'd':
      if (r == p - 1 || s == 1) excluded();
      row.ell = s - 1;
      for (int i = 0; i < p; ++i) row.delta[i] = pabs(s - 1 - i) + pabs(p - r - i) + (p - 1 - i);
      break;
    default:
      throw std::invalid_argument("melzer_character: case_row must be 'a'..'d'");
  }
  return row;
}

// Upper bound on the shell index N = sum_{k>=2} k n_k of any term that can
// reach the truncation order.  With u^2 = m C m^T, the A-type Cartan form
// satisfies sum m_i^2 <= u^2 / lambda_min, so the exponent (c1 u^2 - c2 m_ell
// with c2 m_ell <= c2 u / sqrt(lambda_min)) exceeds the order once u passes
// the positive root; and N <= 2 sum (k-1) n_k = m_1 + Delta_1 <= u /
// sqrt(lambda_min) + Delta_1 bounds the shell index.
std::int64_t shell_cap(int width, std::int64_t internal8, std::int64_t delta1, bool half) {
  double lmin = 2.0 * (1.0 - std::cos(M_PI / (width + 1)));
  double s = std::sqrt(lmin);
  double I = static_cast<double>(std::max<std::int64_t>(internal8, 0));
  double c1 = half ? 1.0 : 2.0;
  double c2 = half ? 2.0 : 4.0;
  // positive root of c1 u^2 - (c2/s) u - I = 0
  double u = (c2 / s + std::sqrt(c2 * c2 / (s * s) + 4.0 * c1 * I)) / (2.0 * c1);
  return static_cast<std::int64_t>(u / s) + delta1 + 2;
}

}  // namespace

TruncatedSeries melzer_character(int band, int r, int s, char case_row, QExp order) {
  const int p = band;
  if (p < 3 || r < 1 || r > p - 1 || s < 1 || s > p) {
    throw std::invalid_argument("melzer_character: bad parameters");
  }
  Row row = melzer_char_row(p, r, s, case_row);
  const std::int64_t pref8 = -2LL * (s - r) * (s - r - 1);
  const std::int64_t internal8 = order.eighths - pref8;

  QPoly acc;
  std::vector<std::int64_t> n(p, 0);
  const std::int64_t cap = shell_cap(p - 2, internal8, row.delta[1], /*half=*/false);
  for (std::int64_t N = 0; N <= cap; ++N) {
    for_each_species(p - 1, 2, N, n, [&](const std::vector<std::int64_t>& nn) {
      auto m = m_from(nn, row.delta, p - 1);
      std::int64_t e8 = 2 * quad_form(m, 1, p - 2) - 4 * m[row.ell];
      if (e8 > internal8 || m[1] < 0) return;
      QPoly prod = QPoly::one();
      for (int i = 2; i <= p - 2; ++i) {
        if (m[i] < 0) return;
        prod = prod * q_binomial(static_cast<int>(nn[i]), static_cast<int>(m[i]));
        if (prod.is_zero()) return;
      }
      TruncatedSeries inv =
          inv_pochhammer_finite_truncated(static_cast<int>(m[1]), QExp(internal8 - e8));
      acc += (prod * inv.poly).shifted(QExp(e8)).truncated(QExp(internal8));
    });
  }
  return TruncatedSeries(acc.shifted(QExp(pref8)), order);
}

namespace {

struct HlRow {
  int ell = 0;
  std::vector<std::int64_t> delta;  // 0 .. J
  std::vector<int> tl, tr;          // length J
  bool plain = false;
};

HlRow hl_char_row(int t2, int r, int a, char case_row) {
  const int J = t2 - 2;
  HlRow row;
  row.delta.resize(J + 1);
  auto excluded = [&]() {
    std::ostringstream os;
    os << "character case " << case_row << " excludes r=" << r << " a=" << a << " (t2=" << t2
       << ")";
    throw ExcludedCaseError(os.str());
  };
  const bool r_is_edge = (t2 % 2 != 0) && (2 * r == t2 - 1);  // r = t - 1/2
  switch (case_row) {
    case 'a':
      if (r == 1 || a == 1) excluded();
      row.ell = 2 * a - 2;
      for (int i = 0; i <= J; ++i) row.delta[i] = pabs(2 * a - 2 - i) + pabs(2 * r - 1 - i);
      row.tl = parity_q(2 * a - 1, J);
      row.tr = parity_q(2 * r, J);
      row.plain = true;
      break;
    case 'b':
      if (r == 1 || 2 * a == t2) excluded();
      row.ell = t2 - 2 * a;
      for (int i = 0; i <= J; ++i)
        row.delta[i] = pabs(t2 - 2 * a - i) + pabs(2 * r - 1 - i) + (J - i);
      row.tl = parity_r(2 * a - 1, J);
      row.tr = parity_q(2 * r, J);
      break;
    case 'c':
      if (r_is_edge || 2 * a == t2) excluded();
      row.ell = t2 - 2 * a;
      for (int i = 0; i <= J; ++i) row.delta[i] = pabs(t2 - 2 * a - i) + pabs(t2 - 2 * r - i);
      row.tl = parity_r(2 * a - 1, J);
      row.tr = parity_r(2 * r - 1, J);
      break;
    case 'd':
      if (r_is_edge || a == 1) excluded();
      row.ell = 2 * a - 2;
      for (int i = 0; i <= J; ++i)
        row.delta[i] = pabs(2 * a - 2 - i) + pabs(t2 - 2 * r - i) + (J - i);
      row.tl = parity_q(2 * a - 1, J);
      row.tr = parity_r(2 * r - 1, J);
      break;
    default:
      throw std::invalid_argument("hl_character: case_row must be 'a'..'d'");
  }
  return row;
}

}  // namespace

TruncatedSeries hl_character(int t2, int r, int a, char case_row, QExp order) {
  if (t2 < 4 || a < 1 || 2 * a > t2 || r < 1 || 2 * r >= t2) {
    throw std::invalid_argument("hl_character: bad parameters");
  }
  const int J = t2 - 2;
  HlRow row = hl_char_row(t2, r, a, case_row);
  const std::int64_t d = a - r;
  const std::int64_t pref8 = -2 * d * (2 * d - 1);
  const std::int64_t internal8 = order.eighths - pref8;

  QPoly acc;
  std::vector<std::int64_t> n(J + 1, 0);
  const std::int64_t cap = shell_cap(J - 1, internal8, row.delta[1], /*half=*/true);
  for (std::int64_t N = 0; N <= cap; ++N) {
    for_each_species(J, 2, N, n, [&](const std::vector<std::int64_t>& nn) {
      auto m = m_from(nn, row.delta, J);
      std::int64_t ntr = 0;
      for (int i = 2; i <= J; ++i) ntr += nn[i] * row.tr[i - 1];
      std::int64_t e8 = quad_form(m, 1, J - 1) - 2 * m[row.ell] + 4 * ntr;
      if (e8 > internal8) return;

      auto mhat = [&](int i) {
        std::int64_t x = m[i] - row.tl[i - 1] - row.tr[i - 1];
        if (((x % 2) + 2) % 2 != 0) {
          throw std::logic_error("hl_character: fractional species count");
        }
        return x / 2;
      };
      std::int64_t m1 = mhat(1);
      if (m1 < 0) return;
      QPoly prod = QPoly::one();
      for (int i = 2; i <= J - 1; ++i) {
        std::int64_t mh = mhat(i);
        QPoly factor = row.plain ? q_binomial(static_cast<int>(nn[i]), static_cast<int>(mh))
                                 : q_binomial_modified(static_cast<int>(nn[i]), static_cast<int>(mh));
        if (factor.is_zero()) return;
        prod = prod * factor;
      }
      TruncatedSeries inv =
          inv_pochhammer_finite_truncated(static_cast<int>(m1), QExp(internal8 - e8));
      acc += (prod * inv.poly).shifted(QExp(e8)).truncated(QExp(internal8));
    });
  }
  return TruncatedSeries(acc.shifted(QExp(pref8)), order);
}

TruncatedSeries hl_character_pair(int t2, int a, int b, QExp order) {
  if (b < 1) throw std::invalid_argument("hl_character_pair: b must be >= 1");
  const int L = 2 * static_cast<int>((order.eighths + 7) / 8) + 2;
  TruncatedSeries s1(y_polynomial(1, t2, a, b, L), order);
  TruncatedSeries s2(y_polynomial(1, t2, a, b, L + 1), order);
  if (!agree(s1, s2)) throw std::logic_error("hl_character_pair: limit not stabilized");
  return s1;
}

}  // namespace qvir
