#include "tropint/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace tropint {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IVec>& cols_in) {
  if (cols_in.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<int>(cols_in[0].size()), static_cast<int>(cols_in.size()));
  for (int c = 0; c < m.cols; ++c) {
    if (static_cast<int>(cols_in[c].size()) != m.rows)
      fail(errc::dimension_mismatch, "ragged column list");
    for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols_in[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IVec>& rows_in) {
  if (rows_in.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows_in[r].size()) != m.cols)
      fail(errc::dimension_mismatch, "ragged row list");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows_in[r][c];
  }
  return m;
}

IVec IntMatrix::column(int c) const {
  IVec v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

IVec IntMatrix::row(int r) const {
  IVec v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "dot of unequal lengths");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "sub of unequal lengths");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "add of unequal lengths");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec negate(const IVec& v) {
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero_vec(const IVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Int l1_norm(const IVec& v) {
  Int s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Int content(const IVec& v) {
  Int g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

IVec primitive(const IVec& v) {
  Int g = content(v);
  if (g == 0) fail(errc::zero_vector, "primitive of the zero vector is undefined");
  IVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) fail(errc::not_square, "determinant of a non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        Int t = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
        a.at(r, c) = t / denom;  // exact by Bareiss
      }
      a.at(r, k) = 0;
    }
    denom = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int rank(const IntMatrix& m) {
  IntMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int p = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    for (int i = r + 1; i < a.rows; ++i) {
      if (a.at(i, c) == 0) continue;
      Int pi = a.at(r, c), vi = a.at(i, c);
      for (int j = c; j < a.cols; ++j) a.at(i, j) = a.at(i, j) * pi - a.at(r, j) * vi;
    }
    ++r;
  }
  return r;
}

int rank_of_vectors(const std::vector<IVec>& vs) {
  if (vs.empty()) return 0;
  return rank(IntMatrix::from_rows(vs));
}

namespace {

// index of the entry with smallest nonzero |value| in the working block
bool smallest_pivot(const IntMatrix& a, int from, int& pr, int& pc) {
  bool found = false;
  Int best = 0;
  for (int r = from; r < a.rows; ++r)
    for (int c = from; c < a.cols; ++c) {
      const Int& v = a.at(r, c);
      if (v == 0) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, IntMatrix* col_ops) {
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(m.cols);
  auto swap_cols = [&](int c1, int c2) {
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, c1), v.at(r, c2));
  };
  auto addmul_col = [&](int dst, int src, const Int& q) {  // col dst += q * col src
    for (int r = 0; r < a.rows; ++r) a.at(r, dst) += q * a.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  };
  auto negate_col = [&](int c) {
    for (int r = 0; r < a.rows; ++r) a.at(r, c) = -a.at(r, c);
    for (int r = 0; r < v.rows; ++r) v.at(r, c) = -v.at(r, c);
  };

  int k = 0;
  int bound = std::min(a.rows, a.cols);
  while (k < bound) {
    int pr = 0, pc = 0;
    if (!smallest_pivot(a, k, pr, pc)) break;
    if (pr != k)
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(k, c), a.at(pr, c));
    if (pc != k) swap_cols(k, pc);

    bool clean = true;
    for (int r = k + 1; r < a.rows; ++r) {
      if (a.at(r, k) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(r, k).get_mpz_t(), a.at(k, k).get_mpz_t());
      for (int c = k; c < a.cols; ++c) a.at(r, c) -= q * a.at(k, c);
      if (a.at(r, k) != 0) clean = false;
    }
    for (int c = k + 1; c < a.cols; ++c) {
      if (a.at(k, c) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(k, c).get_mpz_t(), a.at(k, k).get_mpz_t());
      addmul_col(c, k, -q);
      if (a.at(k, c) != 0) clean = false;
    }
    if (!clean) continue;  // remainders left, pick a smaller pivot again

    // divisibility pass: pivot must divide the rest of the block
    bool divides_all = true;
    for (int r = k + 1; r < a.rows && divides_all; ++r)
      for (int c = k + 1; c < a.cols && divides_all; ++c)
        if (a.at(r, c) % a.at(k, k) != 0) {
          // fold the offending row into row k and restart the pivot
          for (int cc = k; cc < a.cols; ++cc) a.at(k, cc) += a.at(r, cc);
          divides_all = false;
        }
    if (!divides_all) continue;

    if (a.at(k, k) < 0) negate_col(k);
    ++k;
  }

  SnfResult res;
  for (int i = 0; i < k; ++i) res.invariant_factors.push_back(a.at(i, i));
  res.rank = k;
  if (col_ops) *col_ops = v;
  return res;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  int row = 0, col = 0;
  while (row < a.rows && col < a.cols) {
    // clear row `row` to a single positive entry at `col` using column ops
    while (true) {
      int p = -1;
      Int best = 0;
      for (int c = col; c < a.cols; ++c) {
        if (a.at(row, c) == 0) continue;
        Int av = abs(a.at(row, c));
        if (p < 0 || av < best) {
          p = c;
          best = av;
        }
      }
      if (p < 0) break;  // row all zero from col on
      if (p != col)
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, col), a.at(r, p));
      bool reduced = true;
      for (int c = col + 1; c < a.cols; ++c) {
        if (a.at(row, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(row, c).get_mpz_t(), a.at(row, col).get_mpz_t());
        for (int r = 0; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, col);
        if (a.at(row, c) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (a.at(row, col) == 0) {
      ++row;  // nothing in this row; pivot column stays
      continue;
    }
    if (a.at(row, col) < 0)
      for (int r = 0; r < a.rows; ++r) a.at(r, col) = -a.at(r, col);
    // reduce entries to the left of the pivot
    for (int c = 0; c < col; ++c) {
      if (a.at(row, c) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(row, c).get_mpz_t(), a.at(row, col).get_mpz_t());
      for (int r = 0; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, col);
    }
    ++row;
    ++col;
  }
  return a;
}

Int lattice_index(const std::vector<IVec>& generators, int ambient_dim) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_dim)
      fail(errc::dimension_mismatch, "generator dimension mismatch");
  IntMatrix m = IntMatrix::from_columns(generators);
  if (m.rows == 0) m = IntMatrix(ambient_dim, 0);
  SnfResult snf = smith_normal_form(m);
  if (snf.rank < ambient_dim)
    fail(errc::rank_deficient, "generators do not span the ambient space");
  Int idx = 1;
  for (const auto& d : snf.invariant_factors) idx *= d;
  return idx;
}

std::vector<IVec> integer_kernel(const IntMatrix& m) {
  IntMatrix v;
  SnfResult snf = smith_normal_form(m, &v);
  std::vector<IVec> basis;
  for (int c = snf.rank; c < m.cols; ++c) basis.push_back(v.column(c));
  return basis;
}

std::vector<IVec> saturate(const std::vector<IVec>& directions, int ambient_dim) {
  std::vector<IVec> nonzero;
  for (const auto& d : directions) {
    if (static_cast<int>(d.size()) != ambient_dim)
      fail(errc::dimension_mismatch, "direction dimension mismatch");
    if (!is_zero_vec(d)) nonzero.push_back(d);
  }
  if (nonzero.empty()) return {};
  // rows spanning the orthogonal complement of span(directions)
  std::vector<IVec> comp = nullspace_integer(IntMatrix::from_rows(nonzero));
  if (comp.empty()) {
    std::vector<IVec> basis;
    for (int i = 0; i < ambient_dim; ++i) {
      IVec e(ambient_dim, Int(0));
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  return integer_kernel(IntMatrix::from_rows(comp));
}

std::vector<int> select_independent_subsystem(const std::vector<IVec>& normals, int r) {
  std::vector<int> chosen;
  std::vector<IVec> sofar;
  for (int i = 0; i < static_cast<int>(normals.size()) && static_cast<int>(chosen.size()) < r;
       ++i) {
    sofar.push_back(normals[i]);
    if (rank_of_vectors(sofar) == static_cast<int>(sofar.size()))
      chosen.push_back(i);
    else
      sofar.pop_back();
  }
  if (static_cast<int>(chosen.size()) < r)
    fail(errc::insufficient_rank, "normals span fewer than r dimensions");
  return chosen;
}

std::optional<QVec> solve_rational(const IntMatrix& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows) fail(errc::dimension_mismatch, "rhs size mismatch");
  int rows = a.rows, cols = a.cols;
  std::vector<QVec> t(rows, QVec(cols + 1, Rat(0)));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) t[r][c] = Rat(a.at(r, c));
    t[r][cols] = b[r];
  }
  std::vector<int> pivot_col;
  int rr = 0;
  for (int c = 0; c < cols && rr < rows; ++c) {
    int p = -1;
    for (int i = rr; i < rows; ++i)
      if (t[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(t[p], t[rr]);
    Rat inv = t[rr][c];
    for (int j = c; j <= cols; ++j) t[rr][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rr || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (int j = c; j <= cols; ++j) t[i][j] -= f * t[rr][j];
    }
    pivot_col.push_back(c);
    ++rr;
  }
  for (int i = rr; i < rows; ++i)
    if (t[i][cols] != 0) return std::nullopt;
  QVec x(cols, Rat(0));
  for (int i = 0; i < rr; ++i) x[pivot_col[i]] = t[i][cols];
  return x;
}

std::vector<IVec> nullspace_integer(const IntMatrix& a) {
  int rows = a.rows, cols = a.cols;
  std::vector<QVec> t(rows, QVec(cols, Rat(0)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t[r][c] = Rat(a.at(r, c));
  std::vector<int> pivot_col;
  int rr = 0;
  for (int c = 0; c < cols && rr < rows; ++c) {
    int p = -1;
    for (int i = rr; i < rows; ++i)
      if (t[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(t[p], t[rr]);
    Rat inv = t[rr][c];
    for (int j = c; j < cols; ++j) t[rr][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rr || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (int j = c; j < cols; ++j) t[i][j] -= f * t[rr][j];
    }
    pivot_col.push_back(c);
    ++rr;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<IVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (int i = 0; i < rr; ++i) v[pivot_col[i]] = -t[i][c];
    // clear denominators, make primitive
    Int lcm_den = 1;
    for (const auto& q : v) lcm_den = lcm(lcm_den, Int(q.get_den()));
    IVec iv(cols);
    for (int j = 0; j < cols; ++j) {
      Rat scaled = v[j] * Rat(lcm_den);
      iv[j] = scaled.get_num();
    }
    basis.push_back(primitive(iv));
  }
  return basis;
}

QVec q_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec q_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec q_scale(const QVec& a, const Rat& s) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Rat q_dot_iq(const IVec& a, const QVec& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "dot of unequal lengths");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

}  // namespace tropint
