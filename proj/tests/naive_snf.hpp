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

// Independent invariant-factor oracle for small matrices: d_k is the gcd of
// all k x k minors divided by that of the (k-1) x (k-1) minors. Minors are
// computed by cofactor expansion, sharing no code with the library.

#ifndef GGT_TESTS_NAIVE_SNF_HPP_
#define GGT_TESTS_NAIVE_SNF_HPP_

#include <vector>

#include "ggt/intlin.hpp"

namespace ggt::testing {

inline Int cofactor_det(const std::vector<std::vector<Int>>& a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int total = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      sub.push_back(row);
    }
    Int term = a[0][j] * cofactor_det(sub);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                    std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Diagonal of the Smith form, length min(rows, cols).
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
  const size_t r = m.rows(), c = m.cols(), n = std::min(r, c);
  std::vector<Int> divisors{1};  // gcd of k-minors, k = 0..n
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<size_t>> rows, cols;
    std::vector<size_t> cur;
    subsets(r, k, 0, cur, rows);
    subsets(c, k, 0, cur, cols);
    Int g = 0;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
        for (size_t i = 0; i < k; ++i)
          for (size_t j = 0; j < k; ++j) a[i][j] = m.at(rs[i], cs[j]);
        Int d = cofactor_det(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    }
    divisors.push_back(g);
  }
  std::vector<Int> out;
  for (size_t k = 1; k <= n; ++k) {
    out.push_back(divisors[k] == 0 ? Int(0) : Int(divisors[k] / divisors[k - 1]));
  }
  return out;
}

}  // namespace ggt::testing

#endif  // GGT_TESTS_NAIVE_SNF_HPP_
