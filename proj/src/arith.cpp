#include "latcoh/arith.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

namespace latcoh {

i64 step_cap() {
  if (const char* env = std::getenv("LATCOH_STEP_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1000000;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

i64 mod(i64 a, i64 b) { return a - floor_div(a, b) * b; }

i64 gcd64(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

i64 lcm64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd64(a, b), b < 0 ? -b : b);
}

Int floor(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  Int q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

Int ceil(const Rat& r) { return -floor(Rat(-r)); }

Rat frac(const Rat& r) { return r - Rat(floor(r)); }

i64 to_i64(const Int& v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("integer exceeds 64 bits");
  return static_cast<i64>(v);
}

i64 floor_i64(const Rat& r) { return to_i64(floor(r)); }
i64 ceil_i64(const Rat& r) { return to_i64(ceil(r)); }

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow");
  return r;
}

Int bareiss_det(const IMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Int> leading_minors(const IMatrix& m) {
  std::vector<Int> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    IMatrix sub(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(bareiss_det(sub));
  }
  return out;
}

RMatrix inverse(const IMatrix& m) {
  const std::size_t n = m.size();
  RMatrix a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[c], a[p]);
    Rat piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (std::size_t j = c; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  RMatrix inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<Rat> solve(RMatrix a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular system");
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Smith smith_form(const IMatrix& m0) {
  const std::size_t n = m0.size();
  using Row = std::vector<Int>;
  std::vector<Row> a(n, Row(n)), u(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m0[i][j];
    u[i][i] = 1;
  }
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < n; ++j) {
      a[dst][j] -= f * a[src][j];
      u[dst][j] -= f * u[src][j];
    }
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < n; ++i) a[i][dst] -= f * a[i][src];
  };
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // move the smallest nonzero entry of the trailing block to (t, t)
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == n || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == n) break;
      std::swap(a[t], a[bi]);
      std::swap(u[t], u[bi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        Int q = a[i][t] / a[t][t];
        if (q != 0) row_op(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = a[t][j] / a[t][t];
        if (q != 0) col_op(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = 0; j < n; ++j) {
        a[t][j] += a[bad][j];
        u[t][j] += u[bad][j];
      }
    }
  }
  Smith s;
  s.u = u;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] < 0) {
      a[i][i] = -a[i][i];
      for (auto& x : s.u[i]) x = -x;
    }
    s.d.push_back(a[i][i]);
  }
  return s;
}

std::optional<std::vector<Rat>> fit_polynomial(const std::vector<Rat>& xs, const std::vector<Rat>& ys, int degree) {
  const std::size_t n = static_cast<std::size_t>(degree) + 1;
  if (xs.size() < n) throw std::invalid_argument("not enough samples for the fit");
  RMatrix a(n, std::vector<Rat>(n));
  std::vector<Rat> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= xs[i];
    }
    b[i] = ys[i];
  }
  auto c = solve(a, b);
  for (std::size_t i = n; i < xs.size(); ++i)
    if (eval_polynomial(c, xs[i]) != ys[i]) return std::nullopt;
  return c;
}

Rat eval_polynomial(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

i64 hirzebruch_numerator(const Vec& ks) {
  i64 a = 1, b = 0;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    i64 na = checked_add(checked_mul(*it, a), -b);
    b = a;
    a = na;
  }
  return a;
}

}  // namespace latcoh
