#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gex/lattice.hpp"

namespace gex {

// Faces of one dimension stored as a flat array of sorted index tuples,
// tuples in lexicographic order.
struct FaceSet {
  int verts_per_face = 1;
  std::vector<std::int32_t> flat;

  std::int64_t count() const {
    return verts_per_face == 0
               ? 0
               : static_cast<std::int64_t>(flat.size()) / verts_per_face;
  }
  const std::int32_t* face(std::int64_t i) const {
    return flat.data() + i * verts_per_face;
  }
};

// Clique complex of the L-inf unit-distance graph on a lattice vertex set.
// Faces are cliques; orientation is the global lexicographic vertex order.
struct ExcursionComplex {
  int d = 1;
  std::vector<Point> vertices;                 // lexicographically sorted
  std::vector<FaceSet> faces_by_dim;           // dims 0..max_dim
  std::vector<std::pair<int, int>> adjacency;  // 1-skeleton edges (i < j)

  int max_dim() const { return static_cast<int>(faces_by_dim.size()) - 1; }
  std::int64_t face_count(int dim) const {
    if (dim < 0 || dim > max_dim()) return 0;
    return faces_by_dim[dim].count();
  }
  std::string to_json() const;
};

struct ComplexOptions {
  std::int64_t face_cap = 10'000'000;  // FaceExplosion beyond this
};

// Vietoris-Rips route: faces are cliques of the pairwise L-inf <= 1 graph,
// enumerated by ordered extension within each vertex's 3^d neighbourhood.
ExcursionComplex build_complex(const std::vector<Point>& vertices, int max_dim,
                               const ComplexOptions& opts = {});

// Cech route: a face is kept iff the cubes B_inf(t, 1/2) have a common
// point, i.e. per coordinate max - min <= 1. Independent candidate
// generation (subsets of 2^d boxes); exists to test against build_complex.
std::vector<FaceSet> cech_faces_by_witness(const std::vector<Point>& vertices,
                                           int max_dim,
                                           const ComplexOptions& opts = {});

// Partition of vertex indices into 1-skeleton components, each sorted,
// ordered by smallest member.
std::vector<std::vector<int>> connected_component_partition(
    const ExcursionComplex& complex);

// Search for 2k+2 vertices of the component with pairwise L1 distance >= 2.
// Exact search; throws SearchCapExceeded past the caps.
struct WitnessOptions {
  int component_cap = 64;
  std::int64_t node_cap = 1'000'000;
};
std::optional<std::vector<int>> distant_vertex_witness(
    const ExcursionComplex& complex, const std::vector<int>& component, int k,
    const WitnessOptions& opts = {});

}  // namespace gex
