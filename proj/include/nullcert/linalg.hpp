#pragma once

#include <optional>
#include <vector>

#include "nullcert/rational.hpp"

namespace nullcert {

/// Dense matrix of exact rationals, row-major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {
    if (r < 0 || c < 0) throw ContractError("matrix dimensions must be nonnegative");
  }

  Rational& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  static RationalMatrix identity(int n);
  RationalMatrix transposed() const;
};

std::vector<Rational> matrix_vector_product(const RationalMatrix& a,
                                            const std::vector<Rational>& x);

/// Exact solution of A x = b, or nullopt when the system is inconsistent.
/// Underdetermined systems get the pivot-column solution (free variables 0).
/// Deterministic for fixed input.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                 const std::vector<Rational>& b);

int rank_exact(const RationalMatrix& a);

/// Basis of { x : A x = 0 }, one vector per free column, deterministic order.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& a);

}  // namespace nullcert
