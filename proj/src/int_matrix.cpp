#include "hesperm/int_matrix.hpp"

namespace hesperm {

namespace {

template <typename Row>
IntMatrix from_rows(const std::vector<Row>& rows) {
  if (rows.empty()) throw std::invalid_argument("make_matrix: no rows");
  const Eigen::Index n_cols = static_cast<Eigen::Index>(rows.front().size());
  if (n_cols == 0) throw std::invalid_argument("make_matrix: empty row");
  IntMatrix A(static_cast<Eigen::Index>(rows.size()), n_cols);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n_cols)
      throw std::invalid_argument("make_matrix: ragged rows");
    Eigen::Index j = 0;
    for (const auto& v : rows[i]) A(i, j++) = v;
  }
  return A;
}

}  // namespace

IntMatrix make_matrix(const std::vector<std::vector<long>>& rows) {
  return from_rows(rows);
}

IntMatrix make_matrix(const std::vector<std::vector<Int>>& rows) {
  return from_rows(rows);
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

IntMatrix transpose(const IntMatrix& A) { return A.transpose(); }

IntMatrix hadamard(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("hadamard: dimension mismatch");
  return A.cwiseProduct(B);
}

bool matrices_equal(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != B(i, j)) return false;
  return true;
}

bool is_lower_hessenberg(const IntMatrix& A) {
  if (!is_square(A))
    throw std::invalid_argument("is_lower_hessenberg: matrix not square");
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = i + 2; j < A.cols(); ++j)
      if (A(i, j) != 0) return false;
  return true;
}

}  // namespace hesperm
