#include "hesperm/families.hpp"

#include "hesperm/sequences.hpp"

#include <algorithm>
#include <cctype>

namespace hesperm {

std::string family_name(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::K: return "K";
    case Family::M: return "M";
    case Family::N: return "N";
    case Family::Lee: return "LEE";
    case Family::SignS: return "S";
    case Family::Tridiag: return "TRIDIAG";
  }
  throw std::logic_error("family_name: bad family");
}

Family parse_family(const std::string& name) {
  std::string u(name);
  std::transform(u.begin(), u.end(), u.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (u == "H") return Family::H;
  if (u == "K") return Family::K;
  if (u == "M") return Family::M;
  if (u == "N") return Family::N;
  if (u == "LEE") return Family::Lee;
  if (u == "S" || u == "SIGN_S") return Family::SignS;
  if (u == "TRIDIAG") return Family::Tridiag;
  throw std::invalid_argument("unknown family: " + name);
}

namespace {

// The common H/K/M/N band without the corner exceptions: main diagonal 2s,
// superdiagonal (i,i+1) = (-1)^i (1-based), lower-subdiagonal 1s.
IntMatrix base_band(long n) {
  IntMatrix A = IntMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) A(i, i) = 2;
  for (long i = 0; i + 1 < n; ++i) A(i, i + 1) = (i % 2 == 0) ? -1 : 1;
  for (long i = 0; i + 2 < n; ++i) A(i + 2, i) = 1;
  return A;
}

// Band pattern of the family with the last-diagonal exception dropped,
// which is exactly what survives in the leading block of every
// intermediate contraction.
IntMatrix open_band(Family f, long n) {
  IntMatrix A = base_band(n);
  switch (f) {
    case Family::H:
    case Family::M:
      break;
    case Family::K:
      if (n >= 2) A(0, 1) = -3;
      break;
    case Family::N:
      A(0, 0) = 3;
      if (n >= 2) A(0, 1) = -2;
      break;
    default:
      throw std::invalid_argument("open_band: not a banded family");
  }
  return A;
}

}  // namespace

IntMatrix build_family(const FamilySpec& spec) {
  const long n = spec.n;
  if (n < 1) throw std::invalid_argument("build_family: order must be >= 1");
  switch (spec.family) {
    case Family::H:
    case Family::K: {
      IntMatrix A = open_band(spec.family, n);
      A(n - 1, n - 1) = 1;
      return A;
    }
    case Family::M:
    case Family::N:
      return open_band(spec.family, n);
    case Family::Lee: {
      if (n < 2) throw std::invalid_argument("build_family: Lee requires n >= 2");
      IntMatrix A = IntMatrix::Zero(n, n);
      for (long i = 0; i < n; ++i) A(i, i) = 1;
      for (long i = 1; i + 1 < n; ++i) A(i, i + 1) = 1;
      if (n >= 3) A(0, 2) = 1;
      for (long i = 0; i + 1 < n; ++i) A(i + 1, i) = 1;
      return A;
    }
    case Family::SignS: {
      IntMatrix A = IntMatrix::Constant(n, n, Int(1));
      for (long i = 0; i + 1 < n; ++i) A(i + 1, i) = -1;
      return A;
    }
    case Family::Tridiag: {
      if (static_cast<long>(spec.sub.size()) != n - 1 ||
          static_cast<long>(spec.main_diag.size()) != n ||
          static_cast<long>(spec.super.size()) != n - 1)
        throw std::invalid_argument("build_family: tridiagonal band lengths must be n-1, n, n-1");
      IntMatrix A = IntMatrix::Zero(n, n);
      for (long i = 0; i < n; ++i) A(i, i) = spec.main_diag[i];
      for (long i = 0; i + 1 < n; ++i) {
        A(i + 1, i) = spec.sub[i];
        A(i, i + 1) = spec.super[i];
      }
      return A;
    }
  }
  throw std::logic_error("build_family: bad family");
}

IntMatrix build_family(Family f, long n) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  return build_family(s);
}

IntMatrix expected_contraction(const FamilySpec& spec, long r) {
  const Family f = spec.family;
  const long n = spec.n;
  if (f != Family::H && f != Family::K && f != Family::M && f != Family::N)
    throw std::invalid_argument("expected_contraction: only H/K/M/N have closed forms");
  if (n < 4) throw std::invalid_argument("expected_contraction: requires n >= 4");
  if (r < 1 || r > n - 2)
    throw std::invalid_argument("expected_contraction: step out of range 1..n-2");

  const bool sums = (f == Family::M || f == Family::N);
  const long m = n - r;
  IntMatrix A = open_band(f, m);
  if (m >= 3) {
    // Bottom row: zeros except the last three entries; last column: zeros
    // except the superdiagonal entry kept by the band above.
    A(m - 1, m - 3) = sums ? fib_sum(r + 1) : fib(r + 1);
    Int mid = sums ? fib_sum(r) : fib(r + 2) - fib(r + 1);
    if ((n - r) % 2 != 0) mid = -mid;
    A(m - 1, m - 2) = mid;
    A(m - 1, m - 1) = sums ? fib_sum(r + 2) : fib(r + 2);
  } else {
    A(1, 0) = sums ? fib_sum(n - 2) : fib(n - 2);
    A(1, 1) = sums ? Int(2 * fib_sum(n - 1) - fib_sum(n - 3)) : fib(n);
  }
  return A;
}

}  // namespace hesperm
