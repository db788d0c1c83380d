#include "fatgraph/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "fatgraph/error.hpp"

namespace fg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return r;
}

IntMatrix zero_matrix(int rows, int cols) { return IntMatrix(rows, std::vector<std::int64_t>(cols, 0)); }

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::Overflow, "determinant entry");
  return static_cast<std::int64_t>(v);
}

}  // namespace

// Fraction-free Bareiss elimination.
std::int64_t determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = narrow(v / prev);
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<std::vector<std::int64_t>> solve_integral(const IntMatrix& a, const std::vector<std::int64_t>& b) {
  const int n = static_cast<int>(a.size());
  const std::int64_t det = determinant(a);
  if (det == 0) throw Error(ErrorKind::SingularGram, "singular system");
  std::vector<std::int64_t> x(n);
  for (int i = 0; i < n; ++i) {
    IntMatrix ai = a;
    for (int r = 0; r < n; ++r) ai[r][i] = b[r];
    std::int64_t num = determinant(std::move(ai));
    if (num % det != 0) return std::nullopt;
    x[i] = num / det;
  }
  return x;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  const std::int64_t det = determinant(a);
  if (det != 1 && det != -1) throw Error(ErrorKind::SingularGram, "matrix is not unimodular");
  IntMatrix inv = zero_matrix(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<std::int64_t> e(n, 0);
    e[c] = 1;
    auto col = solve_integral(a, e);
    for (int r = 0; r < n; ++r) inv[r][c] = (*col)[r];
  }
  return inv;
}

std::int64_t lattice_index(IntMatrix rows, int dim) {
  const int m = static_cast<int>(rows.size());
  int pr = 0;
  std::int64_t index = 1;
  for (int col = 0; col < dim; ++col) {
    while (true) {
      int best = -1;
      for (int r = pr; r < m; ++r)
        if (rows[r][col] != 0 && (best == -1 || std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) best = r;
      if (best == -1) return 0;
      std::swap(rows[pr], rows[best]);
      bool clean = true;
      for (int r = pr + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        std::int64_t q = rows[r][col] / rows[pr][col];
        for (int j = col; j < dim; ++j) rows[r][j] = checked_sub(rows[r][j], checked_mul(q, rows[pr][j]));
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    index = checked_mul(index, std::llabs(rows[pr][col]));
    ++pr;
  }
  return index;
}

int rank_rational(IntMatrix rows) {
  if (rows.empty()) return 0;
  const int m = static_cast<int>(rows.size());
  const int dim = static_cast<int>(rows[0].size());
  int pr = 0;
  for (int col = 0; col < dim && pr < m; ++col) {
    int p = pr;
    while (p < m && rows[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[pr], rows[p]);
    for (int r = pr + 1; r < m; ++r) {
      if (rows[r][col] == 0) continue;
      std::int64_t a = rows[pr][col], b = rows[r][col];
      std::int64_t g = std::gcd(a, b);
      for (int j = col; j < dim; ++j)
        rows[r][j] = checked_sub(checked_mul(a / g, rows[r][j]), checked_mul(b / g, rows[pr][j]));
    }
    ++pr;
  }
  return pr;
}

int rank_mod2(Mod2Matrix rows) {
  if (rows.empty()) return 0;
  const int m = static_cast<int>(rows.size());
  const int dim = static_cast<int>(rows[0].size());
  int pr = 0;
  for (int col = 0; col < dim && pr < m; ++col) {
    int p = pr;
    while (p < m && !rows[p][col]) ++p;
    if (p == m) continue;
    std::swap(rows[pr], rows[p]);
    for (int r = 0; r < m; ++r)
      if (r != pr && rows[r][col])
        for (int j = 0; j < dim; ++j) rows[r][j] ^= rows[pr][j];
    ++pr;
  }
  return pr;
}

std::optional<Mod2Vector> solve_mod2(Mod2Matrix a, Mod2Vector b) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int pr = 0;
  for (int col = 0; col < n && pr < m; ++col) {
    int p = pr;
    while (p < m && !a[p][col]) ++p;
    if (p == m) continue;
    std::swap(a[pr], a[p]);
    std::swap(b[pr], b[p]);
    for (int r = 0; r < m; ++r)
      if (r != pr && a[r][col]) {
        for (int j = 0; j < n; ++j) a[r][j] ^= a[pr][j];
        b[r] ^= b[pr];
      }
    pivot_col.push_back(col);
    ++pr;
  }
  for (int r = pr; r < m; ++r)
    if (b[r]) return std::nullopt;
  Mod2Vector x(n, 0);
  for (int r = 0; r < pr; ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace fg
