#include "hesperm/contraction.hpp"

#include "hesperm/permanent.hpp"

#include <string>

namespace hesperm {

namespace {

std::optional<ContractibleColumn> find_in_block(const IntMatrix& A, long rows,
                                                long cols) {
  if (rows < 2) return std::nullopt;
  for (long k = cols - 1; k >= 0; --k) {
    long i = -1, j = -1;
    int count = 0;
    for (long r = 0; r < rows && count <= 2; ++r) {
      if (A(r, k) != 0) {
        ++count;
        if (i < 0)
          i = r;
        else
          j = r;
      }
    }
    if (count == 2) return ContractibleColumn{k + 1, i + 1, j + 1};
  }
  return std::nullopt;
}

void check_contractible(const IntMatrix& A, long k, long i, long j,
                        const char* what) {
  const long m = A.rows(), n = A.cols();
  if (k < 1 || k > n || i < 1 || i > m || j < 1 || j > m)
    throw std::invalid_argument(std::string(what) + ": index out of range");
  if (i == j) throw std::invalid_argument(std::string(what) + ": rows i and j must differ");
  if (m < 2) throw std::invalid_argument(std::string(what) + ": need at least two rows");
  if (A(i - 1, k - 1) == 0)
    throw std::invalid_argument(std::string(what) + ": entry (i,k) is zero");
  if (A(j - 1, k - 1) == 0)
    throw std::invalid_argument(std::string(what) + ": entry (j,k) is zero");
  for (long r = 0; r < m; ++r)
    if (r != i - 1 && r != j - 1 && A(r, k - 1) != 0)
      throw std::invalid_argument(std::string(what) +
                                  ": column holds a nonzero outside rows i, j");
}

Int per_terminal(const IntMatrix& A) {
  const long m = A.rows();
  if (m == 1) return A(0, 0);
  if (m == 2) return A(0, 0) * A(1, 1) + A(0, 1) * A(1, 0);
  if (m <= kNaiveMaxN) return per_naive(A);
  if (m <= kRyserMaxN) return per_ryser(A);
  throw std::invalid_argument(
      "per_contraction: chain stalled at order " + std::to_string(m) +
      ", not contractible to oracle range");
}

}  // namespace

std::optional<ContractibleColumn> find_contractible_column(const IntMatrix& A) {
  return find_in_block(A, A.rows(), A.cols());
}

IntMatrix contract_column(const IntMatrix& A, long k, long i, long j) {
  check_contractible(A, k, i, j, "contract_column");
  const long m = A.rows(), n = A.cols();
  const Int a_ik = A(i - 1, k - 1), a_jk = A(j - 1, k - 1);
  IntMatrix B(m - 1, n - 1);
  long out_r = 0;
  for (long r = 0; r < m; ++r) {
    if (r == j - 1) continue;
    long out_c = 0;
    for (long c = 0; c < n; ++c) {
      if (c == k - 1) continue;
      if (r == i - 1)
        B(out_r, out_c) = a_jk * A(r, c) + a_ik * A(j - 1, c);
      else
        B(out_r, out_c) = A(r, c);
      ++out_c;
    }
    ++out_r;
  }
  return B;
}

IntMatrix contract_row(const IntMatrix& A, long k, long i, long j) {
  return contract_column(A.transpose(), k, i, j).transpose();
}

ContractionResult per_contraction(const IntMatrix& A, bool with_trace) {
  if (!is_square(A))
    throw std::invalid_argument("per_contraction: matrix not square");
  if (A.rows() < 1)
    throw std::invalid_argument("per_contraction: empty matrix");

  ContractionResult res;
  if (with_trace) res.trace.initial = A;

  IntMatrix W = A;
  long m = W.rows();
  while (m > 2) {
    const auto found = find_in_block(W, m, m);
    if (!found) break;
    const auto [k, i, j] = *found;
    ContractionStep step;
    step.index_k = k;
    step.kept_i = i;
    step.removed_j = j;
    step.mult_ik = W(i - 1, k - 1);
    step.mult_jk = W(j - 1, k - 1);

    if (k == m && j == m) {
      // Last column, last row: combine in place and shrink the active block.
      W.row(i - 1).head(m - 1) = step.mult_jk * W.row(i - 1).head(m - 1) +
                                 step.mult_ik * W.row(m - 1).head(m - 1);
    } else {
      IntMatrix B = contract_column(W.topLeftCorner(m, m), k, i, j);
      W.topLeftCorner(m - 1, m - 1) = B;
    }
    --m;
    step.result_rows = m;
    step.result_cols = m;
    if (with_trace) {
      res.trace.steps.push_back(step);
      res.trace.intermediates.push_back(W.topLeftCorner(m, m));
    }
  }
  const IntMatrix terminal = W.topLeftCorner(m, m);
  if (with_trace) res.trace.final = terminal;
  res.value = per_terminal(terminal);
  return res;
}

Int per_contraction_value(const IntMatrix& A) {
  return per_contraction(A, /*with_trace=*/false).value;
}

}  // namespace hesperm
