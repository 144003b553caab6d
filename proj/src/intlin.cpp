// Copyright 2026 The ggt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ggt/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ggt/error.hpp"

namespace ggt {

IntMatrix::IntMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  }
  IntMatrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  }
  return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::kInvalidArgument, "vector dimension mismatch");
  }
  IntVector out(rows_, Int(0));
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Int& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << at(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] -= q * row[src]
void row_sub(IntMatrix& m, size_t dst, size_t src, const Int& q) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

// col[dst] -= q * col[src]
void col_sub(IntMatrix& m, size_t dst, size_t src, const Int& q) {
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void axpy(IntVector& dst, const IntVector& src, const Int& q) {
  for (size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, size_t dim) {
  size_t r = 0;
  for (size_t col = 0; col < dim && r < rows.size(); ++col) {
    bool found = false;
    while (true) {
      size_t best = rows.size();
      for (size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      found = true;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                   rows[r][col].get_mpz_t());
        axpy(rows[i], rows[r], q);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (rows[r][col] < 0) {
      for (Int& v : rows[r]) v = -v;
    }
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[r][col].get_mpz_t());
      if (q != 0) axpy(rows[i], rows[r], q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

size_t pivot_col(const IntVector& row) {
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) return j;
  }
  return row.size();
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  SmithForm out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  IntMatrix& D = out.D;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;
  const size_t diag = std::min(rows, cols);
  for (size_t t = 0; t < diag; ++t) {
    bool any = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      size_t bi = rows, bj = cols;
      for (size_t i = t; i < rows; ++i) {
        for (size_t j = t; j < cols; ++j) {
          if (D.at(i, j) == 0) continue;
          if (bi == rows || abs(D.at(i, j)) < abs(D.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      any = true;
      swap_rows(D, t, bi);
      swap_rows(U, t, bi);
      swap_cols(D, t, bj);
      swap_cols(V, t, bj);
      bool done = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        row_sub(D, i, t, q);
        row_sub(U, i, t, q);
        if (D.at(i, t) != 0) done = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        col_sub(D, j, t, q);
        col_sub(V, j, t, q);
        if (D.at(t, j) != 0) done = false;
      }
      if (!done) continue;
      // Enforce divisibility into the trailing block.
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i) {
        for (size_t j = t + 1; j < cols; ++j) {
          if (D.at(i, j) % D.at(t, t) != 0) {
            row_sub(D, t, i, Int(-1));
            row_sub(U, t, i, Int(-1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (!any) break;
    if (D.at(t, t) < 0) {
      for (size_t j = 0; j < cols; ++j) D.at(t, j) = -D.at(t, j);
      for (size_t j = 0; j < rows; ++j) U.at(t, j) = -U.at(t, j);
    }
    ++out.rank;
  }
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  }
  const size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return Int(0);
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

Lattice Lattice::from_generators(size_t ambient_dim,
                                 const std::vector<IntVector>& generators) {
  for (const IntVector& g : generators) {
    if (g.size() != ambient_dim) {
      throw Error(ErrorCode::kInvalidArgument, "generator dimension mismatch");
    }
  }
  Lattice out(ambient_dim);
  out.basis_ = hermite_rows(generators, ambient_dim);
  return out;
}

Lattice Lattice::full(size_t ambient_dim) {
  std::vector<IntVector> gens;
  for (size_t i = 0; i < ambient_dim; ++i) {
    IntVector e(ambient_dim, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(ambient_dim, gens);
}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != ambient_dim_) return false;
  IntVector rest = v;
  for (const IntVector& row : basis_) {
    const size_t p = pivot_col(row);
    // Echelon order: entries left of this pivot are already zero.
    for (size_t j = 0; j < p; ++j) {
      if (rest[j] != 0) return false;
    }
    if (rest[p] % row[p] != 0) return false;
    Int q = rest[p] / row[p];
    axpy(rest, row, q);
  }
  return std::all_of(rest.begin(), rest.end(),
                     [](const Int& x) { return x == 0; });
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const IntVector& v) { return contains(v); });
}

Lattice kernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<IntVector> gens;
  for (size_t j = snf.rank; j < m.cols(); ++j) {
    IntVector col(m.cols());
    for (size_t i = 0; i < m.cols(); ++i) col[i] = snf.V.at(i, j);
    gens.push_back(std::move(col));
  }
  return Lattice::from_generators(m.cols(), gens);
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  CokernelInvariants out;
  for (size_t i = 0; i < snf.rank; ++i) {
    if (snf.D.at(i, i) > 1) out.torsion.push_back(snf.D.at(i, i));
  }
  out.free_rank = m.rows() - snf.rank;
  return out;
}

Lattice preimage(const IntMatrix& m, const Lattice& target) {
  if (target.ambient_dim() != m.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "preimage dimension mismatch");
  }
  if (target.rank() == 0) return kernel(m);
  const size_t k = target.rank();
  IntMatrix joint(m.rows(), m.cols() + k);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) joint.at(i, j) = m.at(i, j);
    for (size_t b = 0; b < k; ++b) joint.at(i, m.cols() + b) = -target.basis()[b][i];
  }
  const Lattice joint_kernel = kernel(joint);
  std::vector<IntVector> gens;
  for (const IntVector& v : joint_kernel.basis()) {
    gens.emplace_back(v.begin(), v.begin() + static_cast<long>(m.cols()));
  }
  return Lattice::from_generators(m.cols(), gens);
}

Lattice eventual_kernel(const IntMatrix& push,
                        const std::vector<size_t>& forbidden_coords,
                        size_t max_chain) {
  const size_t n = push.rows();
  if (push.cols() != n) {
    throw Error(ErrorCode::kInvalidArgument, "push matrix must be square");
  }
  if (max_chain == 0) max_chain = 4 * std::max<size_t>(n, 1);
  std::vector<bool> forbidden(n, false);
  for (size_t c : forbidden_coords) {
    if (c >= n) throw Error(ErrorCode::kInvalidArgument, "forbidden index out of range");
    forbidden[c] = true;
  }
  std::vector<size_t> allowed;
  for (size_t i = 0; i < n; ++i) {
    if (!forbidden[i]) allowed.push_back(i);
  }
  // Restrict the push to vectors supported on allowed coordinates.
  IntMatrix restricted(n, allowed.size());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < allowed.size(); ++j) restricted.at(i, j) = push.at(i, allowed[j]);
  }
  Lattice current(n);
  for (size_t step = 0; step < max_chain; ++step) {
    const Lattice small = preimage(restricted, current);
    std::vector<IntVector> gens;
    for (const IntVector& v : small.basis()) {
      IntVector full(n, Int(0));
      for (size_t j = 0; j < allowed.size(); ++j) full[allowed[j]] = v[j];
      gens.push_back(std::move(full));
    }
    Lattice next = Lattice::from_generators(n, gens);
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error(ErrorCode::kChainLimitExceeded,
              "eventual kernel chain did not stabilize within " +
                  std::to_string(max_chain) + " steps");
}

}  // namespace ggt
