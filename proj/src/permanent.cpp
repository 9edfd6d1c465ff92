#include "hesperm/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace hesperm {

namespace {

void require_square(const IntMatrix& A, const char* what) {
  if (!is_square(A))
    throw std::invalid_argument(std::string(what) + ": matrix not square");
}

}  // namespace

Int per_naive(const IntMatrix& A) {
  require_square(A, "per_naive");
  const long n = A.rows();
  if (n > kNaiveMaxN)
    throw std::invalid_argument("per_naive: n > " + std::to_string(kNaiveMaxN) +
                                " (factorial cost guard)");
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  Int prod;
  do {
    prod = 1;
    for (long i = 0; i < n && prod != 0; ++i) prod *= A(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Int per_ryser(const IntMatrix& A) {
  require_square(A, "per_ryser");
  const long n = A.rows();
  if (n > kRyserMaxN)
    throw std::invalid_argument("per_ryser: n > " + std::to_string(kRyserMaxN) +
                                " (exponential cost guard)");
  if (n == 0) return 1;

  // per A = (-1)^n Σ_{∅≠S⊆cols} (-1)^{|S|} Π_i Σ_{j∈S} a_ij, enumerated in
  // Gray-code order so each subset differs from its predecessor by one
  // column toggle.
  std::vector<Int> row_sum(n, Int(0));
  Int total = 0;
  Int prod;
  const unsigned long limit = 1ul << n;
  unsigned long prev_gray = 0;
  for (unsigned long idx = 1; idx < limit; ++idx) {
    const unsigned long gray = idx ^ (idx >> 1);
    const unsigned long diff = gray ^ prev_gray;
    const int col = std::countr_zero(diff);
    if (gray & diff)
      for (long i = 0; i < n; ++i) row_sum[i] += A(i, col);
    else
      for (long i = 0; i < n; ++i) row_sum[i] -= A(i, col);
    prev_gray = gray;

    prod = 1;
    for (long i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    const int popcount = std::popcount(gray);
    if (popcount % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  if (n % 2 != 0) total = -total;
  return total;
}

Int per_hessenberg(const IntMatrix& A) {
  require_square(A, "per_hessenberg");
  if (!is_lower_hessenberg(A))
    throw std::invalid_argument("per_hessenberg: matrix not lower Hessenberg");
  const long n = A.rows();
  // p[m] = permanent of the leading m×m submatrix.
  std::vector<Int> p(n + 1);
  p[0] = 1;
  Int super_prod, term;
  for (long m = 1; m <= n; ++m) {
    p[m] = A(m - 1, m - 1) * p[m - 1];
    super_prod = 1;
    for (long r = m - 1; r >= 1; --r) {
      super_prod *= A(r - 1, r);  // path of forced superdiagonal picks
      if (super_prod == 0) break;
      if (A(m - 1, r - 1) != 0) {
        term = A(m - 1, r - 1) * super_prod;
        term *= p[r - 1];
        p[m] += term;
      }
    }
  }
  return p[n];
}

Int det_bareiss(const IntMatrix& A) {
  require_square(A, "det_bareiss");
  const long n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Int prev_pivot = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      long swap_row = -1;
      for (long i = k + 1; i < n; ++i)
        if (M(i, k) != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      M.row(k).swap(M.row(swap_row));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Int t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        // Division is exact by the Bareiss identity.
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        M(i, j) = std::move(t);
      }
      M(i, k) = 0;
    }
    prev_pivot = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

}  // namespace hesperm
