#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;

/// Integer vector; used for cycles in L and for pairing vectors.
using Vec = std::vector<i64>;
using IMatrix = std::vector<Vec>;
using RMatrix = std::vector<std::vector<Rat>>;

/// Raised for invalid input (CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an iteration guard trips (CLI exit code 3).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Iteration guard; LATCOH_STEP_CAP overrides the default of 10^6.
i64 step_cap();

i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);
/// Non-negative residue.
i64 mod(i64 a, i64 b);
i64 gcd64(i64 a, i64 b);
i64 lcm64(i64 a, i64 b);

Int floor(const Rat& r);
Int ceil(const Rat& r);
Rat frac(const Rat& r);
i64 to_i64(const Int& v);
i64 floor_i64(const Rat& r);
i64 ceil_i64(const Rat& r);
std::string to_string(const Rat& r);
std::string to_string(const Int& v);

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

/// Exact determinant by fraction-free elimination; empty matrix has det 1.
Int bareiss_det(const IMatrix& m);
/// Leading principal minors of m, in order.
std::vector<Int> leading_minors(const IMatrix& m);
/// Inverse over Q; throws if singular.
RMatrix inverse(const IMatrix& m);

/// Smith form data: u * m * v = diag(d), u and v unimodular.
struct Smith {
  std::vector<Int> d;
  std::vector<std::vector<Int>> u;
};
Smith smith_form(const IMatrix& m);

/// Solves a square rational system exactly; throws if singular.
std::vector<Rat> solve(RMatrix a, std::vector<Rat> b);

/// Interpolating polynomial of the given degree through the first degree + 1
/// samples; nullopt when any further sample disagrees. Coefficients low to high.
std::optional<std::vector<Rat>> fit_polynomial(const std::vector<Rat>& xs, const std::vector<Rat>& ys, int degree);
Rat eval_polynomial(const std::vector<Rat>& coeffs, const Rat& x);

/// Numerator of the continued fraction [k1, ..., ks] = k1 - 1/(k2 - ...).
i64 hirzebruch_numerator(const Vec& ks);

}  // namespace latcoh
