#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropint/numeric.hpp"

namespace tropint {

// Dense integer matrix, row major. Rows or cols may be zero.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  static IntMatrix from_columns(const std::vector<IVec>& cols_in);
  static IntMatrix from_rows(const std::vector<IVec>& rows_in);
  IVec column(int c) const;
  IVec row(int r) const;
  bool operator==(const IntMatrix& o) const = default;
};

struct SnfResult {
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., nonnegative, zeros trailing removed
  int rank = 0;                        // count of nonzero invariant factors
};

// Basic vector algebra ------------------------------------------------------

Int dot(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec negate(const IVec& v);
bool is_zero_vec(const IVec& v);
Int l1_norm(const IVec& v);
// gcd of absolute values, 0 for the zero vector
Int content(const IVec& v);

// v / gcd(|entries|), orientation preserved. Throws zero_vector on v = 0.
IVec primitive(const IVec& v);

// Exact linear algebra ------------------------------------------------------

// Fraction-free (Bareiss) determinant. Throws not_square.
Int determinant(const IntMatrix& m);

// Rank over Q via exact elimination.
int rank(const IntMatrix& m);
int rank_of_vectors(const std::vector<IVec>& vs);

// Smith normal form via elementary row/column reduction, pivoting on the
// smallest nonzero absolute value. When col_ops is non-null it receives the
// accumulated unimodular column transformation V with M·V ≡ (row ops)·S,
// i.e. kernel vectors of M are the columns of V past the rank.
SnfResult smith_normal_form(const IntMatrix& m, IntMatrix* col_ops = nullptr);

// Column-style Hermite normal form (lower triangular, positive pivots,
// entries right of a pivot zero, entries left reduced). Returns H with the
// same column span over Z as m.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Index [Z^n : <generators>] for generators spanning R^n; computed via SNF.
// Throws rank_deficient when the span is a proper subspace.
Int lattice_index(const std::vector<IVec>& generators, int ambient_dim);

// Z-basis of span_R(directions) ∩ Z^n. Empty input gives an empty basis.
std::vector<IVec> saturate(const std::vector<IVec>& directions, int ambient_dim);

// Z-basis of {x in Z^n : Mx = 0}; saturated by construction.
std::vector<IVec> integer_kernel(const IntMatrix& m);

// Greedy lexicographic choice of r linearly independent vectors.
// Throws insufficient_rank when the span has dimension < r.
std::vector<int> select_independent_subsystem(const std::vector<IVec>& normals, int r);

// Rational solving -----------------------------------------------------------

// One solution x of Ax = b over Q, or nullopt if inconsistent.
std::optional<QVec> solve_rational(const IntMatrix& a, const QVec& b);

// Basis of the rational null space of A, denominators cleared to primitive
// integer vectors.
std::vector<IVec> nullspace_integer(const IntMatrix& a);

QVec q_add(const QVec& a, const QVec& b);
QVec q_sub(const QVec& a, const QVec& b);
QVec q_scale(const QVec& a, const Rat& s);
Rat q_dot_iq(const IVec& a, const QVec& b);

}  // namespace tropint
