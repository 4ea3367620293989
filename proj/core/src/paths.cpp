#include "qvir/paths.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace qvir {

namespace {

void check_flags(int e, int f) {
  if ((e != 0 && e != 1) || (f != 0 && f != 1)) {
    throw std::invalid_argument("boundary flags must be 0 or 1");
  }
}

}  // namespace

void validate(const AbfPath& h) {
  if (h.band < 1) throw std::invalid_argument("AbfPath: band < 1");
  check_flags(h.e, h.f);
  if (h.heights.empty()) throw std::invalid_argument("AbfPath: empty height list");
  for (std::size_t i = 0; i < h.heights.size(); ++i) {
    if (h.heights[i] < 1 || h.heights[i] > h.band) {
      throw std::invalid_argument("AbfPath: height out of band");
    }
    if (i > 0 && std::abs(h.heights[i] - h.heights[i - 1]) != 1) {
      throw std::invalid_argument("AbfPath: step is not +-1");
    }
  }
}

QExp abf_weight(const AbfPath& h) {
  const int L = h.length();
  std::int64_t eighths = 0;
  for (int i = 1; i <= L; ++i) {
    int prev = h.heights[i - 1];
    int next = (i == L) ? h.post_height() : h.heights[i + 1];
    eighths += 2LL * i * std::abs(next - prev);  // |diff| is 0 or 2
  }
  return QExp(eighths);
}

VertexWord vertex_word(const AbfPath& h) {
  const int L = h.length();
  VertexWord v(static_cast<std::size_t>(L) + 1, 'N');
  for (int i = 0; i <= L; ++i) {
    int prev = (i == 0) ? h.pre_height() : h.heights[i - 1];
    int next = (i == L) ? h.post_height() : h.heights[i + 1];
    if (next != prev) v[i] = 'S';
  }
  return v;
}

int straight_count(const VertexWord& v) {
  int m = 0;
  for (char c : v) {
    if (c == 'S') ++m;
    else if (c != 'N') throw std::invalid_argument("VertexWord: bad symbol");
  }
  return m;
}

AbfPath path_from_word(const VertexWord& v, int band, int a, int e) {
  if (v.empty()) throw std::invalid_argument("path_from_word: empty word");
  check_flags(e, 0);
  const int L = static_cast<int>(v.size()) - 1;
  AbfPath h;
  h.band = band;
  h.e = e;
  h.heights.reserve(v.size());
  h.heights.push_back(a);
  int dir = 2 * e - 1;  // step that carried the path into vertex 0
  for (int i = 0; i <= L; ++i) {
    if (v[i] == 'N') dir = -dir;
    else if (v[i] != 'S') throw std::invalid_argument("VertexWord: bad symbol");
    if (i < L) h.heights.push_back(h.heights.back() + dir);
  }
  h.f = (1 - dir) / 2;  // outgoing segment direction fixes f
  validate(h);
  return h;
}

QExp weight_from_word(const VertexWord& v) {
  const std::int64_t L = static_cast<std::int64_t>(v.size()) - 1;
  std::int64_t eighths = 2 * L * (L + 1);
  for (std::int64_t j = 0; j <= L; ++j) {
    if (v[static_cast<std::size_t>(j)] == 'N') eighths -= 4 * j;
  }
  return QExp(eighths);
}

int even_valley_count(const VertexWord& v, int a, int e) {
  int count = 0;
  int i = 0;  // index of the N position within the word
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 'N') continue;
    // valleys are the N's with index = e (mod 2); height parity at
    // position j is (a + j) mod 2, even exactly when j = a (mod 2)
    if ((i - e) % 2 == 0 && (static_cast<int>(j) - a) % 2 == 0) ++count;
    ++i;
  }
  return count;
}

int even_valley_count(const AbfPath& h) {
  return even_valley_count(vertex_word(h), h.a(), h.e);
}

namespace {

void check_abf_args(int band, int a, int b, int e, int f, int L) {
  if (band < 1) throw std::invalid_argument("band < 1");
  if (a < 1 || a > band || b < 1 || b > band) throw std::invalid_argument("endpoint out of band");
  check_flags(e, f);
  if (L < 0) throw std::invalid_argument("negative length");
}

// DFS over heights, low branch first (lexicographic order of produced paths).
void abf_dfs(AbfPath& h, int b, int L, const std::function<void(const AbfPath&)>& emit) {
  int at = static_cast<int>(h.heights.size()) - 1;
  if (at == L) {
    if (h.heights.back() == b) emit(h);
    return;
  }
  int cur = h.heights.back();
  // prune: must still be able to reach b
  if (std::abs(b - cur) > L - at) return;
  for (int step : {-1, +1}) {
    int next = cur + step;
    if (next < 1 || next > h.band) continue;
    h.heights.push_back(next);
    abf_dfs(h, b, L, emit);
    h.heights.pop_back();
  }
}

void for_each_abf(int band, int a, int b, int e, int f, int L,
                  const std::function<void(const AbfPath&)>& emit) {
  check_abf_args(band, a, b, e, f, L);
  AbfPath h;
  h.band = band;
  h.e = e;
  h.f = f;
  h.heights.reserve(static_cast<std::size_t>(L) + 1);
  h.heights.push_back(a);
  abf_dfs(h, b, L, emit);
}

}  // namespace

std::vector<AbfPath> enumerate_abf(int band, int a, int b, int e, int f, int L) {
  std::vector<AbfPath> out;
  for_each_abf(band, a, b, e, f, L, [&out](const AbfPath& h) { out.push_back(h); });
  return out;
}

QPoly gf_abf(int band, int a, int b, int e, int f, int L) {
  QPoly gf;
  for_each_abf(band, a, b, e, f, L,
               [&gf](const AbfPath& h) { gf.add_term(abf_weight(h), 1); });
  return gf;
}

QPoly gf_abf_m(int band, int a, int b, int e, int f, int L, int m) {
  QPoly gf;
  for_each_abf(band, a, b, e, f, L, [&gf, m](const AbfPath& h) {
    if (straight_count(vertex_word(h)) == m) gf.add_term(abf_weight(h), 1);
  });
  return gf;
}

QPoly gf_abf_restricted(int band, int a, int b, int e, int f, int L) {
  QPoly gf;
  for_each_abf(band, a, b, e, f, L, [&gf](const AbfPath& h) {
    if (even_valley_count(h) == 0) gf.add_term(abf_weight(h), 1);
  });
  return gf;
}

QPoly gf_abf_restricted_m(int band, int a, int b, int e, int f, int L, int m) {
  QPoly gf;
  for_each_abf(band, a, b, e, f, L, [&gf, m](const AbfPath& h) {
    if (even_valley_count(h) == 0 && straight_count(vertex_word(h)) == m) {
      gf.add_term(abf_weight(h), 1);
    }
  });
  return gf;
}

void validate(const HalfLatticePath& h) {
  if (h.band2 < 2) throw std::invalid_argument("HalfLatticePath: band2 < 2");
  check_flags(h.e, h.f);
  if (h.heights2.empty()) throw std::invalid_argument("HalfLatticePath: empty height list");
  const int L2 = h.length2();
  for (int j = 0; j <= L2; ++j) {
    if (h.heights2[j] < 2 || h.heights2[j] > h.band2) {
      throw std::invalid_argument("HalfLatticePath: height out of band");
    }
    if (j > 0 && std::abs(h.heights2[j] - h.heights2[j - 1]) != 1) {
      throw std::invalid_argument("HalfLatticePath: step is not +-1/2");
    }
  }
  for (int j = 0; j <= L2; ++j) {
    int prev = (j == 0) ? h.pre_height2() : h.heights2[j - 1];
    int next = (j == L2) ? h.post_height2() : h.heights2[j + 1];
    if (prev == next && next == h.heights2[j] + 1 && h.heights2[j] % 2 != 0) {
      throw std::invalid_argument("HalfLatticePath: valley at non-integer height");
    }
  }
}

QExp half_weight(const HalfLatticePath& h) {
  const int L2 = h.length2();
  std::int64_t eighths = 0;
  for (int j = 1; j <= L2; ++j) {
    int prev = h.heights2[j - 1];
    int next = (j == L2) ? h.post_height2() : h.heights2[j + 1];
    if (next != prev) eighths += 2LL * j;  // straight vertex at x = j/2 adds j/4
  }
  return QExp(eighths);
}

namespace {

void check_half_args(int band2, int a2, int b2, int e, int f, int L2) {
  if (band2 < 2) throw std::invalid_argument("band2 < 2");
  if (a2 < 2 || a2 > band2 || b2 < 2 || b2 > band2) {
    throw std::invalid_argument("endpoint out of band");
  }
  check_flags(e, f);
  if (L2 < 0) throw std::invalid_argument("negative length");
}

void half_dfs(HalfLatticePath& h, int b2, int L2,
              const std::function<void(const HalfLatticePath&)>& emit) {
  int at = static_cast<int>(h.heights2.size()) - 1;
  int cur = h.heights2.back();
  int prev = (at == 0) ? h.pre_height2() : h.heights2[at - 1];
  if (at == L2) {
    if (cur != b2) return;
    // final vertex uses the outgoing boundary segment
    int next = h.post_height2();
    if (prev == next && next == cur + 1 && cur % 2 != 0) return;
    emit(h);
    return;
  }
  if (std::abs(b2 - cur) > L2 - at) return;
  for (int step : {-1, +1}) {
    int next = cur + step;
    if (next < 2 || next > h.band2) continue;
    // valley restriction at the current vertex, now that both of its
    // neighbours are known
    if (prev == next && next == cur + 1 && cur % 2 != 0) continue;
    h.heights2.push_back(next);
    half_dfs(h, b2, L2, emit);
    h.heights2.pop_back();
  }
}

void for_each_half(int band2, int a2, int b2, int e, int f, int L2,
                   const std::function<void(const HalfLatticePath&)>& emit) {
  check_half_args(band2, a2, b2, e, f, L2);
  HalfLatticePath h;
  h.band2 = band2;
  h.e = e;
  h.f = f;
  h.heights2.reserve(static_cast<std::size_t>(L2) + 1);
  h.heights2.push_back(a2);
  half_dfs(h, b2, L2, emit);
}

}  // namespace

std::vector<HalfLatticePath> enumerate_half(int band2, int a2, int b2, int e, int f, int L2) {
  std::vector<HalfLatticePath> out;
  for_each_half(band2, a2, b2, e, f, L2,
                [&out](const HalfLatticePath& h) { out.push_back(h); });
  return out;
}

QPoly gf_half(int band2, int a2, int b2, int e, int f, int L2) {
  QPoly gf;
  for_each_half(band2, a2, b2, e, f, L2,
                [&gf](const HalfLatticePath& h) { gf.add_term(half_weight(h), 1); });
  return gf;
}

HalfLatticePath half_from_restricted(const AbfPath& h) {
  validate(h);
  if (h.band % 2 == 0) {
    throw std::invalid_argument("half_from_restricted: band must be odd");
  }
  if (even_valley_count(h) != 0) {
    throw std::invalid_argument("half_from_restricted: path is not valley-restricted");
  }
  HalfLatticePath out;
  out.band2 = h.band + 1;
  out.e = h.e;
  out.f = h.f;
  out.heights2.reserve(h.heights.size());
  for (int x : h.heights) out.heights2.push_back(x + 1);
  validate(out);
  return out;
}

}  // namespace qvir
