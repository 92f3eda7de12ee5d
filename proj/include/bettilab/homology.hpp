#pragma once

#include <cstdint>
#include <vector>

namespace bettilab {

// Simplicial complex on vertices 0..vertex_count-1, faces stored as sorted
// bitmasks grouped by dimension (faces[k] holds the k-dimensional faces,
// i.e. (k+1)-subsets). The empty face is tracked separately so the void
// complex (no faces at all) and the irrelevant complex {∅} stay distinct.
struct SimplicialComplex {
  int vertex_count = 0;
  bool has_empty_face = false;
  std::vector<std::vector<uint32_t>> faces;

  int dim() const { return static_cast<int>(faces.size()) - 1; }
  bool is_void() const { return !has_empty_face; }
  long long face_count(int k) const {
    if (k == -1) return has_empty_face ? 1 : 0;
    if (k < -1 || k >= static_cast<int>(faces.size())) return 0;
    return static_cast<long long>(faces[static_cast<size_t>(k)].size());
  }
};

// Reduced homology ranks over Q (characteristic 0) or F_p. Entry [i] is
// dim H~_{i-1}, so [0] reports H~_{-1} (1 exactly for the complex {∅}).
// The void complex yields all zeros. Size is dim + 2, at least 1.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k, long characteristic);

// Exact ranks of integer matrices (rows x cols, row-major), over Q via
// fraction-free elimination in arbitrary precision, or over F_p.
long long matrix_rank_q(const std::vector<std::vector<long long>>& m);
long long matrix_rank_mod_p(const std::vector<std::vector<long long>>& m, long p);

// Downward closure of the given facets (vertex index lists), empty face
// included. Vertices range over 0..vertex_count-1, at most 31.
SimplicialComplex complex_from_facets(int vertex_count, const std::vector<std::vector<int>>& facets);

}  // namespace bettilab
