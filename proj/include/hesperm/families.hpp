#pragma once

#include "hesperm/int_matrix.hpp"

#include <string>
#include <vector>

namespace hesperm {

/// Named matrix families. H, K, M, N are the banded lower Hessenberg
/// families whose permanents give Fibonacci/Lucas numbers and their sums;
/// Lee is the near-tridiagonal matrix with per = L_{n-1}; SignS is the
/// (-1,1) sign matrix with per A = det(A∘S); Tridiag is a general
/// tridiagonal matrix given by its three bands.
enum class Family { H, K, M, N, Lee, SignS, Tridiag };

struct FamilySpec {
  Family family = Family::H;
  long n = 1;
  // Tridiag only: lengths n-1, n, n-1.
  std::vector<Int> sub, main_diag, super;
};

std::string family_name(Family f);

/// Parses "H", "K", "M", "N", "LEE", "S" (case-insensitive).
/// Throws std::invalid_argument on anything else.
Family parse_family(const std::string& name);

/// Builds the n×n matrix of the given family.
///
/// Band rules, 1-based entry (i,j), zero elsewhere:
///   H: (i,i)=2 for i<n, (n,n)=1; (i,i+1)=(-1)^i; (i+2,i)=1.
///   K: as H but (1,2)=-3.
///   M: as H but (n,n)=2.
///   N: as M but (1,1)=3 and (1,2)=-2.
///   Lee: (i,i)=1; (i,i+1)=1 for i>=2, (1,2)=0; (1,3)=1; (i+1,i)=1.
///   SignS: all 1 except (i+1,i)=-1.
///   Tridiag: (i+1,i)=sub_i, (i,i)=main_i, (i,i+1)=super_i.
///
/// Degenerate orders: the corner exceptions are applied after the base
/// rule, so H_1=[1], K_1=[1], M_1=[2], N_1=[3]. Lee requires n >= 2.
/// Throws std::invalid_argument on invalid specs.
IntMatrix build_family(const FamilySpec& spec);

IntMatrix build_family(Family f, long n);

/// Closed-form r-th contraction of H_n/K_n/M_n/N_n, 1 <= r <= n-2, n >= 4.
///
/// The leading block keeps the family band pattern (without the
/// last-diagonal corner exception); the bottom row holds, for H/K,
/// [F_{r+1}, (-1)^{n-r}(F_{r+2}-F_{r+1}), F_{r+2}] and for M/N the
/// analogous Fibonacci partial sums. The 2×2 case r = n-2 is
/// [[·,·],[F_{n-2}, F_n]] for H/K and
/// [[·,·],[ΣF_{0..n-2}, 2·ΣF_{0..n-1} - ΣF_{0..n-3}]] for M/N.
IntMatrix expected_contraction(const FamilySpec& spec, long r);

}  // namespace hesperm
