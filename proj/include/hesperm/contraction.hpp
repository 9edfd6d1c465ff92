#pragma once

#include "hesperm/int_matrix.hpp"

#include <optional>
#include <vector>

namespace hesperm {

/// One contraction step. Indices are 1-based, matching the reports and
/// the trace output.
struct ContractionStep {
  enum class Kind { Column, Row };
  Kind kind = Kind::Column;
  long index_k = 0;   // contracted column (or row)
  long kept_i = 0;    // row (or column) that receives the combination
  long removed_j = 0; // row (or column) deleted
  Int mult_ik, mult_jk;
  long result_rows = 0, result_cols = 0;
};

/// Full audit trail of a contraction chain, from the initial matrix down
/// to the terminal one, with every intermediate recorded.
struct ContractionTrace {
  IntMatrix initial;
  std::vector<ContractionStep> steps;
  std::vector<IntMatrix> intermediates;  // one per step
  IntMatrix final;
};

struct ContractionResult {
  Int value;
  ContractionTrace trace;
};

struct ContractibleColumn {
  long k = 0, i = 0, j = 0;  // 1-based; i < j are the two nonzero rows
};

/// Largest column index (1-based) whose column holds exactly two nonzero
/// entries, or nullopt if none qualifies. Requires at least two rows.
std::optional<ContractibleColumn> find_contractible_column(const IntMatrix& A);

/// Contraction of A on column k relative to rows i and j (1-based):
/// row i becomes a_jk·r_i + a_ik·r_j, then row j and column k are deleted.
/// Preserves the permanent. Throws std::invalid_argument if column k does
/// not hold exactly the two nonzeros a_ik, a_jk.
IntMatrix contract_column(const IntMatrix& A, long k, long i, long j);

/// Contraction of A on row k relative to columns i and j, defined as the
/// transpose of the column contraction of the transpose.
IntMatrix contract_row(const IntMatrix& A, long k, long i, long j);

/// Permanent by iterated column contraction: contracts at the largest
/// qualifying column until the matrix is 2×2, 1×1, or no column qualifies,
/// then evaluates the terminal matrix with an oracle (naive up to n=10,
/// Ryser up to n=30). Throws std::invalid_argument if the chain stalls
/// above the oracle range. Tracing records every intermediate; disable it
/// for large orders.
ContractionResult per_contraction(const IntMatrix& A, bool with_trace = true);

/// Value-only convenience wrapper.
Int per_contraction_value(const IntMatrix& A);

}  // namespace hesperm
