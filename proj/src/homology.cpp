#include "gex/homology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "gex/errors.hpp"

namespace gex {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

int mod_inverse(int a, int p) {
  // p prime, a != 0 mod p
  int result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<int>((std::int64_t)result * base % p);
    base = static_cast<int>((std::int64_t)base * base % p);
    e >>= 1;
  }
  return result;
}

// position of a sorted tuple within the lexicographically ordered flat face
// list; -1 if absent
std::int64_t face_position(const FaceSet& fs, const std::int32_t* tup) {
  const int w = fs.verts_per_face;
  std::int64_t lo = 0, hi = fs.count() - 1;
  while (lo <= hi) {
    const std::int64_t mid = (lo + hi) / 2;
    const std::int32_t* f = fs.face(mid);
    int cmp = 0;
    for (int i = 0; i < w; ++i) {
      if (f[i] != tup[i]) {
        cmp = f[i] < tup[i] ? -1 : 1;
        break;
      }
    }
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

using SparseCol = std::vector<std::pair<std::int64_t, int>>;  // row desc

void reduce_mod(SparseCol& col, int p) {
  // entries assumed sorted by row descending with possible duplicates
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  SparseCol out;
  for (const auto& [row, coef] : col) {
    if (!out.empty() && out.back().first == row)
      out.back().second = (out.back().second + coef) % p;
    else {
      if (!out.empty() && out.back().second % p == 0) out.pop_back();
      out.emplace_back(row, coef % p);
    }
  }
  if (!out.empty() && out.back().second % p == 0) out.pop_back();
  for (auto& [row, coef] : out) coef = ((coef % p) + p) % p;
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second == 0; }),
            out.end());
  col = std::move(out);
}

}  // namespace

std::int64_t boundary_rank(const ExcursionComplex& complex, int dim, int p) {
  if (dim <= 0) return 0;
  if (dim > complex.max_dim()) return 0;
  const FaceSet& cols = complex.faces_by_dim[dim];
  const FaceSet& rows = complex.faces_by_dim[dim - 1];
  if (cols.count() == 0 || rows.count() == 0) return 0;

  std::unordered_map<std::int64_t, SparseCol> pivot_col;  // low row -> column
  std::int64_t rank = 0;
  std::vector<std::int32_t> sub(dim);

  for (std::int64_t c = 0; c < cols.count(); ++c) {
    const std::int32_t* f = cols.face(c);
    SparseCol col;
    int sign = 1;
    for (int omit = 0; omit <= dim; ++omit) {
      int w = 0;
      for (int i = 0; i <= dim; ++i)
        if (i != omit) sub[w++] = f[i];
      const std::int64_t r = face_position(rows, sub.data());
      if (r < 0) throw Error("complex not closed under subsets");
      col.emplace_back(r, sign > 0 ? 1 : p - 1);
      sign = -sign;
    }
    reduce_mod(col, p);
    while (!col.empty()) {
      const std::int64_t low = col.front().first;
      auto it = pivot_col.find(low);
      if (it == pivot_col.end()) break;
      // col -= (col.low_coef / pivot.low_coef) * pivot
      const int factor = static_cast<int>(
          (std::int64_t)col.front().second *
          mod_inverse(it->second.front().second, p) % p);
      for (const auto& [row, coef] : it->second)
        col.emplace_back(row, p - static_cast<int>((std::int64_t)coef *
                                                   factor % p));
      reduce_mod(col, p);
    }
    if (!col.empty()) {
      pivot_col.emplace(col.front().first, std::move(col));
      ++rank;
    }
  }
  return rank;
}

BettiVector betti(const ExcursionComplex& complex, int kmax, int p) {
  if (kmax < 0) throw InvalidArgument("kmax must be >= 0");
  if (kmax >= complex.d)
    throw InvalidArgument("betti: kmax must be < d");
  if (complex.max_dim() < kmax + 1)
    throw InvalidArgument("betti: complex needs faces through dim kmax+1");
  if (!is_prime(p)) throw InvalidArgument("coefficient field must be prime");

  BettiVector out;
  out.coefficient_field = p;
  std::vector<std::int64_t> rank_d(kmax + 2, 0);
  for (int dim = 1; dim <= kmax + 1; ++dim)
    rank_d[dim] = boundary_rank(complex, dim, p);
  for (int k = 0; k <= kmax; ++k)
    out.betti.push_back(complex.face_count(k) - rank_d[k] - rank_d[k + 1]);

  // beta_0 must agree with the component count from union-find
  const auto comps = connected_component_partition(complex);
  if (out.betti[0] != static_cast<std::int64_t>(comps.size()))
    throw Error("beta_0 mismatch between reduction and union-find");
  return out;
}

std::string BettiVector::to_csv_row() const {
  std::ostringstream os;
  os << coefficient_field;
  for (auto b : betti) os << "," << b;
  return os.str();
}

}  // namespace gex
