#include "hesperm/io.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace hesperm {

std::string to_json(const IntMatrix& A) {
  nlohmann::json j;
  j["n_rows"] = A.rows();
  j["n_cols"] = A.cols();
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < A.cols(); ++c) row.push_back(A(i, c).get_str());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

IntMatrix from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const long n_rows = j.at("n_rows").get<long>();
  const long n_cols = j.at("n_cols").get<long>();
  if (n_rows < 1 || n_cols < 1)
    throw std::invalid_argument("matrix JSON: dimensions must be >= 1");
  const auto& rows = j.at("entries");
  if (static_cast<long>(rows.size()) != n_rows)
    throw std::invalid_argument("matrix JSON: row count mismatch");
  IntMatrix A(n_rows, n_cols);
  for (long i = 0; i < n_rows; ++i) {
    const auto& row = rows.at(i);
    if (static_cast<long>(row.size()) != n_cols)
      throw std::invalid_argument("matrix JSON: column count mismatch");
    for (long c = 0; c < n_cols; ++c) {
      const std::string s = row.at(c).get<std::string>();
      if (mpz_set_str(A(i, c).get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("matrix JSON: bad integer literal '" + s + "'");
    }
  }
  return A;
}

std::string to_csv(const IntMatrix& A) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index c = 0; c < A.cols(); ++c) {
      if (c) os << ',';
      os << A(i, c).get_str();
    }
    os << '\n';
  }
  return os.str();
}

void print_matrix(std::ostream& os, const IntMatrix& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    os << "  [";
    for (Eigen::Index c = 0; c < A.cols(); ++c) {
      if (c) os << ", ";
      os << A(i, c).get_str();
    }
    os << "]\n";
  }
}

}  // namespace hesperm
