#pragma once

#include "hesperm/int_matrix.hpp"

#include <iosfwd>
#include <string>

namespace hesperm {

/// JSON form: {"n_rows": R, "n_cols": C, "entries": [["2","-1"],...]}.
/// Entries are decimal strings so values past 64 bits survive any consumer.
std::string to_json(const IntMatrix& A);
IntMatrix from_json(const std::string& text);

/// One CSV line per row, entries in plain decimal.
std::string to_csv(const IntMatrix& A);

void print_matrix(std::ostream& os, const IntMatrix& A);

}  // namespace hesperm
