#include "bettilab/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include <gmpxx.h>

#include "bettilab/error.hpp"

namespace bettilab {

long long matrix_rank_q(const std::vector<std::vector<long long>>& m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);
  // Fraction-free elimination: one-step Bareiss with row pivoting; the
  // division by the previous pivot is exact.
  mpz_class prev = 1;
  size_t r = 0;
  long long rank = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        mpz_class num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

long long matrix_rank_mod_p(const std::vector<std::vector<long long>>& m, long p) {
  if (p < 2) fail(Errc::MalformedInput, "modulus must be a prime >= 2");
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = ((m[i][j] % p) + p) % p;
  auto inv = [p](long long x) {
    // extended Euclid; x nonzero mod the prime p
    long long t = 0, nt = 1, r = p, nr = x % p;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return ((t % p) + p) % p;
  };
  size_t r = 0;
  long long rank = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    long long pi = inv(a[r][c]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      long long f = a[i][c] * pi % p;
      for (size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Boundary from k-faces to (k-1)-faces with alternating signs by position.
std::vector<std::vector<long long>> boundary_matrix(const SimplicialComplex& kx, int k) {
  const auto& cods = kx.faces[static_cast<size_t>(k - 1)];
  const auto& doms = kx.faces[static_cast<size_t>(k)];
  std::unordered_map<uint32_t, size_t> row;
  row.reserve(cods.size() * 2);
  for (size_t i = 0; i < cods.size(); ++i) row.emplace(cods[i], i);
  std::vector<std::vector<long long>> m(cods.size(), std::vector<long long>(doms.size(), 0));
  for (size_t col = 0; col < doms.size(); ++col) {
    uint32_t face = doms[col];
    int sign = 1;
    for (uint32_t bits = face; bits; bits &= bits - 1) {
      uint32_t v = bits & ~(bits - 1);
      auto it = row.find(face & ~v);
      if (it == row.end()) fail(Errc::MalformedInput, "complex not closed under taking subsets");
      m[it->second][col] = sign;
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k, long characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    fail(Errc::MalformedInput, "characteristic must be 0 or a prime");
  int dim = k.dim();
  while (dim >= 0 && k.faces[static_cast<size_t>(dim)].empty()) --dim;
  if (dim >= 0 && !k.has_empty_face)
    fail(Errc::MalformedInput, "nonvoid complex must contain the empty face");
  std::vector<long long> h(static_cast<size_t>(std::max(dim + 2, 1)), 0);
  if (k.is_void()) return h;
  auto rank = [&](const std::vector<std::vector<long long>>& m) {
    return characteristic == 0 ? matrix_rank_q(m) : matrix_rank_mod_p(m, characteristic);
  };
  // r[k+1] = rank of the boundary leaving the k-faces; the map from the
  // vertices hits the empty face with all-ones coefficients.
  std::vector<long long> r(static_cast<size_t>(dim + 3), 0);
  if (dim >= 0)
    r[1] = k.faces[0].empty() ? 0 : 1;
  for (int q = 1; q <= dim; ++q) r[static_cast<size_t>(q + 1)] = rank(boundary_matrix(k, q));
  for (int q = -1; q <= dim; ++q) {
    long long free_rank = k.face_count(q) - r[static_cast<size_t>(q + 1)];
    h[static_cast<size_t>(q + 1)] = free_rank - r[static_cast<size_t>(q + 2)];
  }
  return h;
}

SimplicialComplex complex_from_facets(int vertex_count, const std::vector<std::vector<int>>& facets) {
  if (vertex_count < 0 || vertex_count > 31) fail(Errc::MalformedInput, "vertex count out of range");
  SimplicialComplex k;
  k.vertex_count = vertex_count;
  k.has_empty_face = true;
  std::vector<std::vector<uint32_t>> byd;
  auto add_closed = [&](uint32_t mask) {
    // enumerate all submasks including mask itself, excluding empty
    for (uint32_t s = mask;; s = (s - 1) & mask) {
      if (s) {
        int d = __builtin_popcount(s) - 1;
        if (d >= static_cast<int>(byd.size())) byd.resize(static_cast<size_t>(d) + 1);
        byd[static_cast<size_t>(d)].push_back(s);
      }
      if (s == 0) break;
    }
  };
  for (const auto& f : facets) {
    uint32_t mask = 0;
    for (int v : f) {
      if (v < 0 || v >= vertex_count) fail(Errc::MalformedInput, "facet vertex out of range");
      mask |= 1u << v;
    }
    add_closed(mask);
  }
  for (auto& level : byd) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  k.faces = std::move(byd);
  return k;
}

}  // namespace bettilab
