#include "reglang/counting.hpp"

#include <cmath>
#include <limits>

#include "reglang/error.hpp"

namespace reglang {

BigMatrix BigMatrix::identity(std::size_t n) {
  BigMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& rhs) const {
  if (n_ != rhs.n_) throw Error("matrix dimension mismatch");
  BigMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t l = 0; l < n_; ++l) {
      const BigInt& a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (rhs(l, j) != 0) out(i, j) += a * rhs(l, j);
    }
  return out;
}

BigMatrix BigMatrix::pow(std::size_t exponent) const {
  BigMatrix result = identity(n_);
  BigMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CountVectors count_vectors(const LabeledGraph& trimmed) {
  const std::size_t n = trimmed.vertex_count();
  CountVectors cv{BigMatrix(n), std::vector<BigInt>(n), std::vector<BigInt>(n)};
  for (const auto& e : trimmed.edges()) cv.matrix(e.from, e.to) += 1;
  if (trimmed.initial()) cv.initial[*trimmed.initial()] = 1;
  for (std::size_t v = 0; v < n; ++v)
    if (trimmed.accepting()[v]) cv.final[v] = 1;
  return cv;
}

CountVectors path_vectors(const LabeledGraph& graph) {
  const std::size_t n = graph.vertex_count();
  CountVectors cv{BigMatrix(n), std::vector<BigInt>(n, 1), std::vector<BigInt>(n, 1)};
  for (const auto& e : graph.edges()) cv.matrix(e.from, e.to) += 1;
  return cv;
}

CountStream::CountStream(const CountVectors& system)
    : row_(system.initial), scratch_(system.initial.size()), final_(system.final) {
  const std::size_t n = system.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (system.matrix(i, j) != 0) entries_.push_back({i, j, system.matrix(i, j)});
  refresh_exact();
  cumulative_ = exact_;
}

void CountStream::refresh_exact() {
  exact_ = 0;
  for (std::size_t i = 0; i < row_.size(); ++i)
    if (final_[i] != 0 && row_[i] != 0) exact_ += row_[i] * final_[i];
}

void CountStream::advance() {
  for (auto& s : scratch_) s = 0;
  for (const auto& e : entries_) {
    if (row_[e.from] == 0) continue;
    if (e.weight == 1) {
      scratch_[e.to] += row_[e.from];
    } else {
      mpz_addmul(scratch_[e.to].get_mpz_t(), row_[e.from].get_mpz_t(), e.weight.get_mpz_t());
    }
  }
  row_.swap(scratch_);
  ++length_;
  refresh_exact();
  cumulative_ += exact_;
}

BigInt count_len(const CountVectors& system, std::size_t n) {
  CountStream stream(system);
  while (stream.length() < n) stream.advance();
  return stream.exact();
}

BigInt count_upto(const CountVectors& system, std::size_t n) {
  CountStream stream(system);
  while (stream.length() < n) stream.advance();
  return stream.cumulative();
}

BigInt block_count(const LabeledGraph& graph, std::size_t n) {
  return count_len(path_vectors(graph), n);
}

CountVectors residue_language(const CountVectors& system, std::size_t q, std::size_t k) {
  if (q == 0) throw Error("residue modulus must be at least 1");
  if (k >= q) throw Error("residue must be smaller than the modulus");
  const std::size_t n = system.dimension();
  CountVectors out{system.matrix.pow(q), system.initial, std::vector<BigInt>(n)};
  BigMatrix shift = system.matrix.pow(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (shift(i, j) != 0) out.final[i] += shift(i, j) * system.final[j];
  return out;
}

CountVectors trim_system(const CountVectors& system) {
  const std::size_t n = system.dimension();
  std::vector<bool> forward(n, false);
  std::vector<bool> backward(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i)
    if (system.initial[i] != 0) {
      forward[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!forward[j] && system.matrix(i, j) != 0) {
        forward[j] = true;
        stack.push_back(j);
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (system.final[i] != 0) {
      backward[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    auto j = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < n; ++i)
      if (!backward[i] && system.matrix(i, j) != 0) {
        backward[i] = true;
        stack.push_back(i);
      }
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (forward[i] && backward[i]) kept.push_back(i);
  CountVectors out{BigMatrix(kept.size()), {}, {}};
  for (std::size_t a = 0; a < kept.size(); ++a) {
    out.initial.push_back(system.initial[kept[a]]);
    out.final.push_back(system.final[kept[a]]);
    for (std::size_t b = 0; b < kept.size(); ++b) out.matrix(a, b) = system.matrix(kept[a], kept[b]);
  }
  return out;
}

double log2_big(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den == 0) return 0.0;
  if (num == 0) return 0.0;
  long e_num = 0;
  long e_den = 0;
  double m_num = mpz_get_d_2exp(&e_num, num.get_mpz_t());
  double m_den = mpz_get_d_2exp(&e_den, den.get_mpz_t());
  return std::ldexp(m_num / m_den, static_cast<int>(e_num - e_den));
}

}  // namespace reglang
