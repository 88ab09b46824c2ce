#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "reglang/graph.hpp"

namespace reglang {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense square matrix of big integers.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t n) : n_(n), cells_(n * n) {}
  static BigMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

  BigMatrix operator*(const BigMatrix& rhs) const;
  BigMatrix pow(std::size_t exponent) const;

  friend bool operator==(const BigMatrix& a, const BigMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> cells_;
};

/// Word-counting system: |W_n| = initial * A^n * final.
struct CountVectors {
  BigMatrix matrix;
  std::vector<BigInt> initial;  // row vector
  std::vector<BigInt> final;    // column vector, possibly with multiplicities

  std::size_t dimension() const noexcept { return initial.size(); }
};

/// System of a trim graph: indicator of the initial vertex and of the
/// accepting vertices. An empty graph gives the zero-dimensional system.
CountVectors count_vectors(const LabeledGraph& trimmed);

/// All-ones initial and final vectors, so that the count is 1^T A^n 1.
CountVectors path_vectors(const LabeledGraph& graph);

/// Running state of the counts for n = 0, 1, 2, ...; each advance() is one
/// vector-matrix product.
class CountStream {
 public:
  explicit CountStream(const CountVectors& system);

  std::size_t length() const noexcept { return length_; }
  /// |W_n| at the current length.
  const BigInt& exact() const noexcept { return exact_; }
  /// |W_<=n| at the current length.
  const BigInt& cumulative() const noexcept { return cumulative_; }

  void advance();

 private:
  struct Entry {
    std::size_t from;
    std::size_t to;
    BigInt weight;
  };

  void refresh_exact();

  std::vector<Entry> entries_;
  std::vector<BigInt> row_;
  std::vector<BigInt> scratch_;
  std::vector<BigInt> final_;
  std::size_t length_ = 0;
  BigInt exact_;
  BigInt cumulative_;
};

BigInt count_len(const CountVectors& system, std::size_t n);
BigInt count_upto(const CountVectors& system, std::size_t n);

/// Number of length-n paths in the graph, 1^T A^n 1. For a right-resolving
/// graph, paths/|V| <= |B_n(G)| <= paths.
BigInt block_count(const LabeledGraph& graph, std::size_t n);

/// System for words whose length is q*m + k: matrix A^q, same initial
/// vector, final vector A^k f. Requires q >= 1 and k < q.
CountVectors residue_language(const CountVectors& system, std::size_t q, std::size_t k);

/// Drops coordinates not reachable from the initial support or unable to
/// reach the final support through nonzero matrix entries.
CountVectors trim_system(const CountVectors& system);

/// log2 of a positive big integer; -infinity for zero.
double log2_big(const BigInt& value);

/// num/den as a double, 0 when den is 0.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace reglang
