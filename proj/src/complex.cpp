#include "gex/complex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "gex/errors.hpp"

namespace gex {

namespace {

// Compact key for points with coordinates in a modest range.
std::int64_t point_key(const Point& p) {
  std::int64_t k = 0;
  for (int c : p) k = k * (1 << 21) + (c + (1 << 20));
  return k;
}

void check_sorted_distinct(const std::vector<Point>& vertices) {
  for (size_t i = 1; i < vertices.size(); ++i) {
    if (!lex_less(vertices[i - 1], vertices[i]))
      throw InvalidArgument(
          "vertices must be distinct and lexicographically sorted");
  }
}

}  // namespace

ExcursionComplex build_complex(const std::vector<Point>& vertices, int max_dim,
                               const ComplexOptions& opts) {
  if (max_dim < 0) throw InvalidArgument("max_dim must be >= 0");
  check_sorted_distinct(vertices);
  ExcursionComplex K;
  K.d = vertices.empty() ? 1 : static_cast<int>(vertices[0].size());
  K.vertices = vertices;
  const int n = static_cast<int>(vertices.size());

  std::unordered_map<std::int64_t, int> index_of;
  index_of.reserve(vertices.size() * 2);
  for (int i = 0; i < n; ++i) index_of[point_key(vertices[i])] = i;

  // later-indexed neighbours of each vertex, increasing
  const auto offsets = unit_ball_offsets(K.d);
  std::vector<std::vector<int>> later(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& off : offsets) {
      auto it = index_of.find(point_key(add(vertices[i], off)));
      if (it != index_of.end() && it->second > i)
        later[i].push_back(it->second);
    }
    std::sort(later[i].begin(), later[i].end());
    for (int j : later[i]) K.adjacency.emplace_back(i, j);
  }
  std::sort(K.adjacency.begin(), K.adjacency.end());

  K.faces_by_dim.resize(max_dim + 1);
  for (int dim = 0; dim <= max_dim; ++dim)
    K.faces_by_dim[dim].verts_per_face = dim + 1;
  std::int64_t total_faces = 0;

  // ordered clique extension: every clique is emitted once, smallest
  // vertex first
  std::vector<std::int32_t> clique;
  std::vector<std::vector<int>> cand_stack;
  auto emit = [&](const std::vector<std::int32_t>& c) {
    total_faces++;
    if (total_faces > opts.face_cap)
      throw FaceExplosion("face count exceeds cap " +
                          std::to_string(opts.face_cap));
    auto& fs = K.faces_by_dim[c.size() - 1];
    fs.flat.insert(fs.flat.end(), c.begin(), c.end());
  };

  std::function<void(const std::vector<int>&)> extend =
      [&](const std::vector<int>& cands) {
        if (static_cast<int>(clique.size()) > max_dim) return;
        emit(clique);
        if (static_cast<int>(clique.size()) == max_dim + 1) return;
        for (size_t idx = 0; idx < cands.size(); ++idx) {
          const int v = cands[idx];
          std::vector<int> next;
          // candidates after v that are also adjacent to v
          for (size_t jdx = idx + 1; jdx < cands.size(); ++jdx) {
            const int w = cands[jdx];
            if (std::binary_search(later[v].begin(), later[v].end(), w))
              next.push_back(w);
          }
          clique.push_back(v);
          extend(next);
          clique.pop_back();
        }
      };

  for (int i = 0; i < n; ++i) {
    clique.assign(1, i);
    emit(clique);
    if (max_dim >= 1) {
      clique.assign(1, i);
      for (size_t idx = 0; idx < later[i].size(); ++idx) {
        const int v = later[i][idx];
        std::vector<int> next;
        for (size_t jdx = idx + 1; jdx < later[i].size(); ++jdx) {
          const int w = later[i][jdx];
          if (std::binary_search(later[v].begin(), later[v].end(), w))
            next.push_back(w);
        }
        clique.push_back(v);
        extend(next);
        clique.pop_back();
      }
    }
    clique.clear();
  }
  // tuples are generated in lexicographic order already for dim 0; higher
  // dims follow from the ordered extension rooted at increasing i
  return K;
}

std::vector<FaceSet> cech_faces_by_witness(const std::vector<Point>& vertices,
                                           int max_dim,
                                           const ComplexOptions& opts) {
  if (max_dim < 0) throw InvalidArgument("max_dim must be >= 0");
  check_sorted_distinct(vertices);
  const int d = vertices.empty() ? 1 : static_cast<int>(vertices[0].size());
  const int n = static_cast<int>(vertices.size());

  // any face lies inside a 2-box [a, a+1]^d; collect vertices per box
  std::unordered_map<std::int64_t, int> index_of;
  for (int i = 0; i < n; ++i) index_of[point_key(vertices[i])] = i;

  std::map<std::vector<std::int32_t>, bool> seen;  // canonical tuples
  std::vector<FaceSet> faces(max_dim + 1);
  for (int dim = 0; dim <= max_dim; ++dim) faces[dim].verts_per_face = dim + 1;
  std::int64_t total = 0;

  auto witness_ok = [&](const std::vector<std::int32_t>& tup) {
    for (int c = 0; c < d; ++c) {
      int lo = vertices[tup[0]][c], hi = lo;
      for (std::int32_t vi : tup) {
        lo = std::min(lo, vertices[vi][c]);
        hi = std::max(hi, vertices[vi][c]);
      }
      if (hi - lo > 1) return false;  // [t-1/2, t+1/2] intervals disjoint
    }
    return true;
  };

  for (int i = 0; i < n; ++i) {
    // vertices of the 2^d boxes anchored within distance 1 of vertex i
    Point anchor(d);
    std::vector<int> shift(d, -1);
    while (true) {
      for (int c = 0; c < d; ++c) anchor[c] = vertices[i][c] + shift[c];
      std::vector<std::int32_t> box;
      Point corner(d);
      for (int mask = 0; mask < (1 << d); ++mask) {
        for (int c = 0; c < d; ++c)
          corner[c] = anchor[c] + ((mask >> c) & 1);
        auto it = index_of.find(point_key(corner));
        if (it != index_of.end()) box.push_back(it->second);
      }
      std::sort(box.begin(), box.end());
      const int m = static_cast<int>(box.size());
      for (int mask = 1; mask < (1 << m); ++mask) {
        if (__builtin_popcount(mask) > max_dim + 1) continue;
        std::vector<std::int32_t> tup;
        for (int b = 0; b < m; ++b)
          if ((mask >> b) & 1) tup.push_back(box[b]);
        if (!witness_ok(tup)) continue;
        auto [it2, inserted] = seen.emplace(std::move(tup), true);
        if (inserted) {
          ++total;
          if (total > opts.face_cap)
            throw FaceExplosion("face count exceeds cap " +
                                std::to_string(opts.face_cap));
        }
      }
      int c = d - 1;
      while (c >= 0 && shift[c] == 0) shift[c--] = -1;
      if (c < 0) break;
      ++shift[c];
    }
  }
  for (const auto& [tup, _] : seen) {
    auto& fs = faces[tup.size() - 1];
    fs.flat.insert(fs.flat.end(), tup.begin(), tup.end());
  }
  return faces;
}

std::vector<std::vector<int>> connected_component_partition(
    const ExcursionComplex& complex) {
  const int n = static_cast<int>(complex.vertices.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : complex.adjacency) {
    int a = find(i), b = find(j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::optional<std::vector<int>> distant_vertex_witness(
    const ExcursionComplex& complex, const std::vector<int>& component, int k,
    const WitnessOptions& opts) {
  if (k < 0) throw InvalidArgument("k must be >= 0");
  const int need = 2 * k + 2;
  const int m = static_cast<int>(component.size());
  if (m > opts.component_cap)
    throw SearchCapExceeded("component size " + std::to_string(m) +
                            " exceeds cap " +
                            std::to_string(opts.component_cap));
  if (m < need) return std::nullopt;

  // compatibility graph: pairs at L1 distance >= 2; find a clique of size
  // 2k+2 by exact branch-and-bound
  std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const bool ok = l1_dist(complex.vertices[component[a]],
                              complex.vertices[component[b]]) >= 2;
      compat[a][b] = compat[b][a] = ok;
    }

  std::int64_t nodes = 0;
  std::vector<int> chosen;
  std::function<bool(int)> grow = [&](int start) -> bool {
    if (static_cast<int>(chosen.size()) == need) return true;
    if (++nodes > opts.node_cap)
      throw SearchCapExceeded("witness search exceeded node cap");
    for (int a = start; a < m; ++a) {
      if (m - a < need - static_cast<int>(chosen.size())) return false;
      bool ok = true;
      for (int b : chosen)
        if (!compat[b][a]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(a);
      if (grow(a + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!grow(0)) return std::nullopt;
  std::vector<int> out;
  out.reserve(need);
  for (int a : chosen) out.push_back(component[a]);
  return out;
}

std::string ExcursionComplex::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : vertices) vs.push_back(v);
  j["vertices"] = vs;
  nlohmann::json fbd = nlohmann::json::array();
  for (const auto& fs : faces_by_dim) {
    nlohmann::json dimfaces = nlohmann::json::array();
    for (std::int64_t i = 0; i < fs.count(); ++i) {
      nlohmann::json tup = nlohmann::json::array();
      for (int c = 0; c < fs.verts_per_face; ++c) tup.push_back(fs.face(i)[c]);
      dimfaces.push_back(tup);
    }
    fbd.push_back(dimfaces);
  }
  j["faces_by_dim"] = fbd;
  return j.dump();
}

}  // namespace gex
