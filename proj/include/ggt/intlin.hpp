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

// Exact integer linear algebra over Z: Smith and Hermite forms, kernels,
// cokernels, preimage lattices and the eventual-kernel chain.

#ifndef GGT_INTLIN_HPP_
#define GGT_INTLIN_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace ggt {

using Int = mpz_class;
using IntVector = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols);

  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector apply(const IntVector& x) const;
  IntMatrix transposed() const;
  bool is_zero() const;

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Int> entries_;
};

// U * m * V = D, U and V unimodular, D diagonal with d1 | d2 | ... and
// nonnegative diagonal.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

// A subgroup of Z^n stored as the rows of its Hermite echelon form: pivots
// positive, entries above each pivot reduced into [0, pivot). Two lattices
// are equal iff their stored bases are identical.
class Lattice {
 public:
  explicit Lattice(size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Lattice from_generators(size_t ambient_dim,
                                 const std::vector<IntVector>& generators);
  static Lattice full(size_t ambient_dim);

  size_t ambient_dim() const { return ambient_dim_; }
  size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;

  bool operator==(const Lattice& other) const = default;

 private:
  size_t ambient_dim_;
  std::vector<IntVector> basis_;
};

// Full integer kernel {x : m x = 0}.
Lattice kernel(const IntMatrix& m);

struct CokernelInvariants {
  std::vector<Int> torsion;  // entries > 1, each dividing the next
  size_t free_rank = 0;
};

// Invariants of Z^rows / im(m).
CokernelInvariants cokernel_invariants(const IntMatrix& m);

// {x in Z^cols : m x in target}.
Lattice preimage(const IntMatrix& m, const Lattice& target);

// Largest lattice of the chain V0 = 0, V(i+1) = {z : z_c = 0 for forbidden c,
// push z in V(i)}. Throws ChainLimitExceeded when the chain has not
// stabilized after max_chain steps (0 selects 4 * dim).
Lattice eventual_kernel(const IntMatrix& push,
                        const std::vector<size_t>& forbidden_coords,
                        size_t max_chain = 0);

}  // namespace ggt

#endif  // GGT_INTLIN_HPP_
