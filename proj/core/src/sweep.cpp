#include "qvir/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qvir/bosonic.hpp"
#include "qvir/fermionic.hpp"
#include "qvir/paths.hpp"
#include "qvir/qspecial.hpp"
#include "qvir/transforms.hpp"

namespace qvir {

namespace {

using Task = std::function<Report()>;

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("QVIR_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs the tasks on `jobs` threads; each task writes to its own slot so the
// concatenated report order matches the task order exactly.
Report run_tasks(std::vector<Task> tasks, int jobs) {
  std::vector<Report> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        slots[i] = tasks[i]();
      } catch (const std::exception& ex) {
        slots[i] = {{"sweep/unexpected-exception", "", false, ex.what()}};
      }
    }
  };
  jobs = std::min<int>(resolve_jobs(jobs), static_cast<int>(tasks.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Report all;
  for (auto& r : slots) all.insert(all.end(), r.begin(), r.end());
  return all;
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

// All weakly decreasing sequences of exactly `parts` entries in [0, maxPart]
// (zeros kept, so every particle carries an explicit displacement).
std::vector<std::vector<int>> partitions_into(int parts, int maxPart) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int bound) {
    if (idx == parts) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur[idx] = v;
      rec(idx + 1, v);
    }
  };
  if (parts == 0) {
    out.push_back({});
  } else {
    rec(0, maxPart);
  }
  return out;
}

Report suite_trinomial(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  tasks.push_back([&cfg] { return verify_trinomial_identities(3, 6, cfg.lmax); });
  tasks.push_back([&cfg] { return verify_trinomial_limits(3, 6, cfg.order); });
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_abf(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (int p : cfg.bands) {
    for (int a = 1; a <= p; ++a) {
      for (int b = 1; b <= p; ++b) {
        tasks.push_back([=, lmax = cfg.lmax] {
          Report rep;
          for (int e = 0; e <= 1; ++e) {
            for (int f = 0; f <= 1; ++f) {
              for (int L = 0; L <= lmax; ++L) {
                auto idx = fmt({{"p", p}, {"a", a}, {"b", b}, {"e", e}, {"f", f}, {"L", L}});
                QPoly paths = gf_abf(p, a, b, e, f, L);
                rep.push_back({"abf/bosonic-matches-enumeration", idx,
                               paths == abf_bosonic_finitized(p, a, b, e, f, L), ""});
                try {
                  rep.push_back({"abf/fermionic-matches-enumeration", idx,
                                 paths == melzer_finitized(p, a, b, e, f, L), ""});
                } catch (const ExcludedCaseError&) {
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_half(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (int t2 : cfg.t2s) {
    for (int a = 1; 2 * a <= t2; ++a) {
      for (int b2 = 2; b2 <= t2; ++b2) {
        tasks.push_back([=, lmax = cfg.lmax] {
          Report rep;
          for (int e = 0; e <= 1; ++e) {
            for (int f = 0; f <= 1; ++f) {
              for (int L2 = 0; L2 <= lmax; ++L2) {
                auto idx =
                    fmt({{"t2", t2}, {"a", a}, {"b2", b2}, {"e", e}, {"f", f}, {"L2", L2}});
                QPoly paths = gf_half(t2, 2 * a, b2, e, f, L2);
                rep.push_back({"half/bosonic-matches-enumeration", idx,
                               paths == half_bosonic_finitized(t2, a, b2, e, f, L2), ""});
                try {
                  rep.push_back({"half/fermionic-matches-enumeration", idx,
                                 paths == hl_finitized(t2, 2 * a, b2, e, f, L2), ""});
                } catch (const ExcludedCaseError&) {
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_rabf(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (int p : cfg.bands) {
    for (int a = 1; a <= p; ++a) {
      for (int b = 1; b <= p; ++b) {
        tasks.push_back([=, lmax = cfg.lmax] {
          Report rep;
          for (int e = 0; e <= 1; ++e) {
            for (int f = 0; f <= 1; ++f) {
              for (int L = 0; L <= lmax; ++L) {
                auto idx = fmt({{"p", p}, {"a", a}, {"b", b}, {"e", e}, {"f", f}, {"L", L}});
                try {
                  rep.push_back({"rabf/fermionic-matches-enumeration", idx,
                                 gf_abf_restricted(p, a, b, e, f, L) ==
                                     rabf_finitized(p, a, b, e, f, L),
                                 ""});
                } catch (const ExcludedCaseError&) {
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
  // The height-halving rescaling: the restricted sum at band t2-1 in q^{1/2}
  // is the half-lattice generating function at band t2/2.
  for (int t2 : cfg.t2s) {
    for (int a = 1; 2 * a <= t2; ++a) {
      for (int b2 = 2; b2 <= t2; ++b2) {
        tasks.push_back([=, lmax = cfg.lmax] {
          Report rep;
          for (int e = 0; e <= 1; ++e) {
            for (int f = 0; f <= 1; ++f) {
              for (int L2 = 0; L2 <= lmax; ++L2) {
                auto idx =
                    fmt({{"t2", t2}, {"a", a}, {"b2", b2}, {"e", e}, {"f", f}, {"L2", L2}});
                try {
                  QPoly rescaled =
                      rabf_finitized(t2 - 1, 2 * a - 1, b2 - 1, e, f, L2).substitute_power(1, 2);
                  rep.push_back({"rabf/half-lattice-rescaling", idx,
                                 rescaled == gf_half(t2, 2 * a, b2, e, f, L2), ""});
                } catch (const ExcludedCaseError&) {
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_bijection(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  const int lround = std::min(cfg.lmax, 5);
  // Round trips of the composite transform through its decomposition.
  for (int p : {2, 3}) {
    for (int a = 1; a <= p; ++a) {
      for (int b = 1; b <= p; ++b) {
        tasks.push_back([=] {
          Report rep;
          for (int e = 0; e <= 1; ++e) {
            for (int f = 0; f <= 1; ++f) {
              for (int L = 0; L <= lround; ++L) {
                if (L == 0 && e != f) continue;  // band extension undefined
                for (const AbfPath& h : enumerate_abf(p, a, b, e, f, L)) {
                  AbfPath g1 = c1_transform(h);
                  for (int n = 0; n <= 3; ++n) {
                    for (const auto& lambda : partitions_into(n, L)) {
                      AbfPath g = c3_transform(c2_transform(g1, n), lambda);
                      auto idx = fmt({{"p", p}, {"a", a}, {"b", b}, {"e", e}, {"f", f},
                                      {"L", L}, {"n", n}, {"w", abf_weight(h).eighths}});
                      std::int64_t sumL = 0;
                      for (int part : lambda) sumL += part;
                      bool wok = abf_weight(g).eighths ==
                                 abf_weight(g1).eighths + 8 * sumL;
                      PathDecomposition d = c_decompose(g, straight_count(vertex_word(h)));
                      bool rok = d.base.heights == h.heights && d.base.band == h.band &&
                                 d.base.e == h.e && d.base.f == h.f && d.n == n &&
                                 d.lambda == lambda;
                      rep.push_back({"transform/weight-law", idx, wok, ""});
                      rep.push_back({"transform/round-trip", idx, rok, ""});
                    }
                  }
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
  // Straight-count recursions, unrestricted and valley-restricted, and the
  // refined weight-graded bijection.
  for (int p : {2, 3, 4}) {
    for (int a = 1; a <= p; ++a) {
      for (int b = 1; b <= p; ++b) {
        tasks.push_back([=, lmax = cfg.lmax] {
          Report rep;
          for (int e = 0; e <= 1; ++e) {
            for (int f = 0; f <= 1; ++f) {
              for (int L = 0; L <= lmax; ++L) {
                for (int Lp = 0; Lp <= lmax; ++Lp) {
                  Report u = unrestricted_transform_check(p, a, b, e, f, L, Lp);
                  rep.insert(rep.end(), u.begin(), u.end());
                  Report r = restricted_transform_check(p, a, b, e, f, L, Lp);
                  rep.insert(rep.end(), r.begin(), r.end());
                  Report rb = refined_bijection_check(p, a, b, e, f, L, Lp);
                  rep.insert(rep.end(), rb.begin(), rb.end());
                }
              }
            }
          }
          return rep;
        });
      }
    }
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_characters(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  const QExp ord = QExp::integer(cfg.order);
  for (int p : cfg.bands) {
    for (int r = 1; r <= p - 1; ++r) {
      for (int s = 1; s <= p; ++s) {
        tasks.push_back([=] {
          Report rep;
          TruncatedSeries chi = rocha_caridi(2 * p, p + 1, 2 * r, s, ord);
          for (char row : {'a', 'b', 'c', 'd'}) {
            try {
              TruncatedSeries fer = melzer_character(p, r, s, row, ord);
              rep.push_back({"character/abf-fermionic-matches-series",
                             fmt({{"p", p}, {"r", r}, {"s", s}}) + " row=" + row,
                             agree(fer, chi), ""});
            } catch (const ExcludedCaseError&) {
            }
          }
          return rep;
        });
      }
    }
  }
  for (int t2 : cfg.t2s) {
    for (int r = 1; 2 * r < t2; ++r) {
      for (int a = 1; 2 * a <= t2; ++a) {
        tasks.push_back([=] {
          Report rep;
          TruncatedSeries chi = rocha_caridi(t2, t2 + 1, 2 * r, 2 * a, ord);
          for (char row : {'a', 'b', 'c', 'd'}) {
            try {
              TruncatedSeries fer = hl_character(t2, r, a, row, ord);
              rep.push_back({"character/half-fermionic-matches-series",
                             fmt({{"t2", t2}, {"r", r}, {"a", a}}) + " row=" + row,
                             agree(fer, chi), ""});
            } catch (const ExcludedCaseError&) {
            }
          }
          return rep;
        });
      }
    }
    for (int a = 1; 2 * a <= t2; ++a) {
      for (int b = 1; 2 * b <= t2; ++b) {
        tasks.push_back([=] {
          Report rep;
          TruncatedSeries pair = hl_character_pair(t2, a, b, ord);
          QExp wide(ord.eighths + 8 * std::abs(a - b) + 8);
          QPoly rhs = rocha_caridi(t2, t2 + 1, 2 * b, 2 * a, wide).poly +
                      rocha_caridi(t2, t2 + 1, 2 * (b - 1), 2 * a, wide)
                          .poly.shifted(QExp::integer(a - b));
          rep.push_back({"character/pair-combination",
                         fmt({{"t2", t2}, {"a", a}, {"b", b}}),
                         agree(pair, TruncatedSeries(rhs, ord)), ""});
          return rep;
        });
      }
    }
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_recurrences(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (int t2 : cfg.t2s) {
    tasks.push_back([=, lmax = cfg.lmax] { return verify_bosonic_recurrences(t2, lmax); });
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

Report suite_sharpness(const SweepConfig& cfg) {
  std::vector<Task> tasks;
  for (int t2 : cfg.t2s) {
    tasks.push_back([=, lmax = cfg.lmax] {
      Report rep;
      bool exercised = false;
      for (int e = 0; e <= 1; ++e) {
        for (int f = 0; f <= 1; ++f) {
          for (int a = 1; 2 * a <= t2; ++a) {
            for (int b = 1; 2 * b <= t2; ++b) {
              // Parameter windows in which the two binomial conventions may
              // genuinely differ, and the indices at which the special value
              // is permitted to fire, per table row.
              bool allowed = false;
              std::function<bool(int)> in_window = [](int) { return false; };
              if (e == 1 && f == 1) {
                allowed = (a == b && a >= 2);
                in_window = [=](int i) { return i < 2 * a - 1 && i % 2 != 0; };
              } else if (e == 0 && f == 1) {
                allowed = (a > 1 && 2 * b == t2);
                in_window = [=](int i) { return i > t2 - 2 * a && (i - t2) % 2 != 0; };
              } else if (e == 0 && f == 0) {
                allowed = (a > 1 && b > 1);
                in_window = [=](int i) {
                  return i > std::max(t2 - 2 * a, t2 - 2 * b) && (i - t2) % 2 != 0;
                };
              } else {
                allowed = (2 * a == t2 && b > 1);
                in_window = [=](int i) { return i > t2 - 2 * b && (i - t2) % 2 != 0; };
              }
              for (int L = 0; 2 * L <= 2 * lmax; ++L) {
                auto idx = fmt({{"t2", t2}, {"a", a}, {"b", b}, {"e", e}, {"f", f}, {"L", L}});
                std::set<int> fired;
                FermionicOptions mod_opt;
                mod_opt.fired = &fired;
                FermionicOptions plain_opt;
                plain_opt.plain_binomials = true;
                QPoly modified, plain;
                try {
                  modified = hl_finitized_opt(t2, 2 * a, 2 * b, e, f, 2 * L, mod_opt);
                  plain = hl_finitized_opt(t2, 2 * a, 2 * b, e, f, 2 * L, plain_opt);
                } catch (const ExcludedCaseError&) {
                  break;
                }
                bool windows_ok = true;
                for (int i : fired) {
                  if (!allowed || !in_window(i)) windows_ok = false;
                }
                exercised = exercised || !fired.empty();
                rep.push_back({"sharpness/special-value-window", idx, windows_ok, ""});
                rep.push_back({"sharpness/difference-iff-fired", idx,
                               (plain == modified) == fired.empty(), ""});
              }
            }
          }
        }
      }
      rep.push_back({"sharpness/special-value-exercised", fmt({{"t2", t2}}), exercised, ""});
      return rep;
    });
  }
  return run_tasks(std::move(tasks), cfg.jobs);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"trinomial",   "abf",  "half",
                                              "rabf",        "bijection", "characters",
                                              "recurrences", "sharpness", "all"};
  return names;
}

Report run_suite(const std::string& suite, const SweepConfig& cfg) {
  if (suite == "trinomial") return suite_trinomial(cfg);
  if (suite == "abf") return suite_abf(cfg);
  if (suite == "half") return suite_half(cfg);
  if (suite == "rabf") return suite_rabf(cfg);
  if (suite == "bijection") return suite_bijection(cfg);
  if (suite == "characters") return suite_characters(cfg);
  if (suite == "recurrences") return suite_recurrences(cfg);
  if (suite == "sharpness") return suite_sharpness(cfg);
  if (suite == "all") {
    Report all;
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      Report r = run_suite(name, cfg);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace qvir
