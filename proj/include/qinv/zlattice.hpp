#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace qinv {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense row-major matrix over arbitrary-precision integers.  All arithmetic
// is exact; intermediate HNF/SNF entries can exceed any fixed-width type.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  void append_row(const IntVec& v);

  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  // row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Int& k);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_col(std::size_t c);
  // col a += k * col b
  void add_col_multiple(std::size_t a, std::size_t b, const Int& k);

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// v * m (row vector times matrix).
IntVec vec_mat_mul(const IntVec& v, const IntMatrix& m);

// Sublattice of Z^ambient_rank.  basis is in row HNF with zero rows removed,
// so two lattices are equal iff their fields are equal.
struct Lattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;  // basis.rows() == rank, basis.cols() == ambient_rank

  std::size_t rank() const { return basis.rows(); }
  bool operator==(const Lattice& o) const { return ambient_rank == o.ambient_rank && basis == o.basis; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
};

// Canonical row Hermite form of the row span of m: pivots positive, entries
// above each pivot reduced into [0, pivot), zero rows dropped.
Lattice hnf(const IntMatrix& m);

struct HnfTransform {
  IntMatrix h;  // full HNF including zero rows (same row count as input)
  IntMatrix u;  // unimodular, u * m == h
};
HnfTransform hnf_with_transform(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., nonneg, length min(rows, cols)
  IntMatrix left;                      // unimodular
  IntMatrix right;                     // unimodular; left * m * right is diag(invariant_factors)
};
SnfResult snf(const IntMatrix& m);

// Basis of { v : v * m = 0 }; rank(result) = rows(m) - rank(m).
Lattice kernel_basis(const IntMatrix& m);

Lattice lattice_from_rows(std::size_t ambient_rank, const std::vector<IntVec>& rows);
Lattice zero_lattice(std::size_t ambient_rank);
Lattice full_lattice(std::size_t ambient_rank);

// HNF basis of a ∩ b; requires equal ambient ranks.
Lattice intersect(const Lattice& a, const Lattice& b);

// Back-substitution against the HNF basis; requires v length = ambient rank.
bool contains(const Lattice& l, const IntVec& v);

// Coefficients x with x * basis = v, when v lies in the lattice.
std::optional<IntVec> coordinates(const Lattice& l, const IntVec& v);

// Convenience: sum of row spans (a + b as subgroups).
Lattice lattice_sum(const Lattice& a, const Lattice& b);

std::size_t rank(const IntMatrix& m);

}  // namespace qinv
