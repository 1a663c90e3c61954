// Generates the shipped matrix-group data files for the solvable
// 2-transitive witnesses:
//
//   data/q8_gl2_f3.dat        Q8 <= SL_2(3)                (degree-9 stabilizer)
//   data/nsl25_e_gl2_f5.dat   N_{SL_2(5)}(Q8) ~= SL_2(3)   (degree-25 stabilizer)
//   data/e5_gl4_f3.dat        (D8 o Q8) : 5   <= SL_4(3)   (degree-81 stabilizers)
//   data/e5x2_gl4_f3.dat      ((D8 o Q8) : 5).2
//   data/e5x4_gl4_f3.dat      ((D8 o Q8) : 5).4
//
// Method for the GL_4(3) groups: E = D8 o Q8 is realized as the Kronecker
// product of the 2-dimensional F_3-representations of D8 and Q8.  Order-5
// automorphisms of E are found by scanning generator images over E and
// solving the intertwiner equation s * g = phi(g) * s (Schur: the kernel is
// one-dimensional since the representation is irreducible), which yields the
// normalizing elements of order 5 directly.  The extensions .2 and .4 come
// from scanning N_{GL_4(3)}(E) for elements normalizing E:5.
//
// Deterministic: all scans run in a fixed order, so the output files are
// reproducible byte for byte.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "derivant/constructors.hpp"
#include "derivant/group_spec.hpp"
#include "derivant/integrability.hpp"

using namespace derivant;

namespace {

struct MatKey {
  std::vector<unsigned> a;
  bool operator<(const MatKey &o) const { return a < o.a; }
};

MatKey key(const Mat &m) { return {m.a}; }

std::vector<Mat> matrix_closure(const Fq &F, std::vector<Mat> gens,
                                std::size_t limit) {
  std::set<MatKey> seen;
  std::vector<Mat> out;
  Mat id = Mat::identity(gens.empty() ? 1 : gens[0].d);
  seen.insert(key(id));
  out.push_back(id);
  for (const Mat &g : gens)
    if (seen.insert(key(g)).second)
      out.push_back(g);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const Mat &g : gens) {
      Mat prod = mat_mul(F, out[k], g);
      if (seen.insert(key(prod)).second) {
        out.push_back(std::move(prod));
        if (out.size() > limit) {
          std::cerr << "closure exceeded limit " << limit << "\n";
          std::exit(1);
        }
      }
    }
  std::sort(out.begin(), out.end(),
            [](const Mat &x, const Mat &y) { return x.a < y.a; });
  return out;
}

Mat kronecker(const Fq &F, const Mat &x, const Mat &y) {
  Mat r(x.d * y.d);
  for (unsigned i = 0; i < x.d; ++i)
    for (unsigned j = 0; j < x.d; ++j)
      for (unsigned k = 0; k < y.d; ++k)
        for (unsigned l = 0; l < y.d; ++l)
          r.at(i * y.d + k, j * y.d + l) = F.mul(x.at(i, j), y.at(k, l));
  return r;
}

void write_data_file(const std::string &path, const MatrixGroupData &data) {
  std::string body = format_matrix_group_data(data);
  std::ofstream out(path, std::ios::binary);
  out << body;
  std::cout << "wrote " << path << " (" << data.matrices.size()
            << " matrices)\n";
}

// solve s*a = b*s for all generator pairs; returns an invertible solution
// if the solution space is one-dimensional and nonzero
std::vector<Mat> intertwiners(const Fq &F, const std::vector<Mat> &from,
                              const std::vector<Mat> &to) {
  unsigned d = from[0].d;
  unsigned n = d * d;
  // rows of the homogeneous system over F_p (f = 1 here)
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t g = 0; g < from.size(); ++g)
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        // (s * from[g] - to[g] * s)_{ij} = 0
        std::vector<unsigned> row(n, 0);
        for (unsigned k = 0; k < d; ++k) {
          // s_{ik} * from[g]_{kj}
          row[i * d + k] = F.add(row[i * d + k], from[g].at(k, j));
          // - to[g]_{ik} * s_{kj}
          row[k * d + j] = F.sub(row[k * d + j], to[g].at(i, k));
        }
        rows.push_back(std::move(row));
      }
  // Gaussian elimination
  unsigned rank = 0;
  std::vector<int> pivot_col;
  for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
    unsigned r = rank;
    while (r < rows.size() && rows[r][col] == 0)
      ++r;
    if (r == rows.size())
      continue;
    std::swap(rows[rank], rows[r]);
    unsigned inv = F.inv(rows[rank][col]);
    for (unsigned cc = 0; cc < n; ++cc)
      rows[rank][cc] = F.mul(rows[rank][cc], inv);
    for (unsigned rr = 0; rr < rows.size(); ++rr) {
      if (rr == rank || rows[rr][col] == 0)
        continue;
      unsigned f = rows[rr][col];
      for (unsigned cc = 0; cc < n; ++cc)
        rows[rr][cc] = F.sub(rows[rr][cc], F.mul(f, rows[rank][cc]));
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  if (rank != n - 1)
    return {}; // kernel not one-dimensional: no (unique) intertwiner
  // back-substitute the single free column
  std::vector<bool> is_pivot(n, false);
  for (int pc : pivot_col)
    is_pivot[static_cast<unsigned>(pc)] = true;
  unsigned free_col = 0;
  while (is_pivot[free_col])
    ++free_col;
  std::vector<unsigned> sol(n, 0);
  sol[free_col] = 1;
  for (unsigned r = 0; r < rank; ++r) {
    unsigned pc = static_cast<unsigned>(pivot_col[r]);
    sol[pc] = F.sub(0, F.mul(rows[r][free_col], 1));
  }
  Mat s(d);
  s.a.assign(sol.begin(), sol.end());
  if (mat_det(F, s) == 0)
    return {};
  return {s};
}

} // namespace

int main(int argc, char **argv) {
  std::string out_dir = argc > 1 ? argv[1] : "data";

  // ---- Q8 in SL_2(3) -------------------------------------------------
  Fq F3(3, 1);
  Mat i3(2), j3(2);
  i3.a = {0, 2, 1, 0}; // [[0,-1],[1,0]]
  j3.a = {1, 1, 1, 2}; // [[1,1],[1,-1]]
  auto q8m = matrix_closure(F3, {i3, j3}, 64);
  if (q8m.size() != 8 || mat_det(F3, i3) != 1 || mat_det(F3, j3) != 1) {
    std::cerr << "Q8/F3 construction failed\n";
    return 1;
  }
  write_data_file(out_dir + "/q8_gl2_f3.dat", {3, 1, 2, {i3, j3}});

  // ---- N_{SL_2(5)}(Q8) ~= SL_2(3) ------------------------------------
  Fq F5(5, 1);
  Mat i5(2), j5(2);
  i5.a = {0, 4, 1, 0}; // [[0,-1],[1,0]]
  j5.a = {2, 0, 0, 3}; // [[2,0],[0,-2]]
  auto q8m5 = matrix_closure(F5, {i5, j5}, 64);
  auto sl25 = matrix_closure(F5, sl_generator_matrices(F5, 2), 200);
  if (q8m5.size() != 8 || sl25.size() != 120) {
    std::cerr << "SL_2(5) setup failed\n";
    return 1;
  }
  std::set<MatKey> q8set5;
  for (const Mat &m : q8m5)
    q8set5.insert(key(m));
  Mat w5;
  for (const Mat &t : sl25) { // deterministic: sorted order
    // t must have order 3 and normalize Q8
    Mat t2 = mat_mul(F5, t, t);
    Mat t3 = mat_mul(F5, t2, t);
    if (!(t3 == Mat::identity(2)) || t == Mat::identity(2))
      continue;
    Mat ti = mat_inverse(F5, t);
    bool norm = true;
    for (const Mat &g : {i5, j5})
      if (!q8set5.count(key(mat_mul(F5, mat_mul(F5, ti, g), t)))) {
        norm = false;
        break;
      }
    if (norm) {
      w5 = t;
      break;
    }
  }
  auto nsl = matrix_closure(F5, {i5, j5, w5}, 64);
  if (nsl.size() != 24) {
    std::cerr << "N_{SL_2(5)}(Q8) has order " << nsl.size() << ", expected 24\n";
    return 1;
  }
  write_data_file(out_dir + "/nsl25_e_gl2_f5.dat", {5, 1, 2, {i5, j5, w5}});

  // ---- E = D8 o Q8 in GL_4(3) and its :5, .2, .4 extensions ----------
  Mat a2(2), b2(2);
  a2.a = {0, 2, 1, 0}; // rotation of order 4
  b2.a = {1, 0, 0, 2}; // reflection
  Mat I2 = Mat::identity(2);
  Mat ea = kronecker(F3, a2, I2);
  Mat eb = kronecker(F3, b2, I2);
  Mat ei = kronecker(F3, I2, i3);
  Mat ej = kronecker(F3, I2, j3);
  std::vector<Mat> egens{ea, eb, ei, ej};
  auto emats = matrix_closure(F3, egens, 64);
  if (emats.size() != 32) {
    std::cerr << "E has order " << emats.size() << ", expected 32\n";
    return 1;
  }
  std::map<MatKey, unsigned> eindex;
  for (unsigned k = 0; k < emats.size(); ++k)
    eindex.emplace(key(emats[k]), k);
  auto emul = [&](unsigned x, unsigned y) {
    return eindex.at(key(mat_mul(F3, emats[x], emats[y])));
  };
  auto einv = [&](unsigned x) {
    return eindex.at(key(mat_inverse(F3, emats[x])));
  };
  unsigned e_id = eindex.at(key(Mat::identity(4)));
  Mat minusI = Mat::identity(4);
  minusI.a[0] = minusI.a[5] = minusI.a[10] = minusI.a[15] = 2;
  unsigned e_z = eindex.at(key(minusI));

  // element orders within E
  auto eorder = [&](unsigned x) {
    unsigned o = 1, c = x;
    while (c != e_id) {
      c = emul(c, x);
      ++o;
    }
    return o;
  };

  // scan generator-image tuples defining automorphisms of E, keep the
  // intertwiners (normalizing matrices)
  std::vector<Mat> normalizers;
  std::set<MatKey> norm_seen;
  for (unsigned xa = 0; xa < 32; ++xa) {
    if (eorder(xa) != 4 || emul(xa, xa) != e_z)
      continue;
    for (unsigned xb = 0; xb < 32; ++xb) {
      if (xb == e_id || emul(xb, xb) != e_id)
        continue;
      if (emul(emul(einv(xb), xa), xb) != einv(xa))
        continue;
      for (unsigned xi = 0; xi < 32; ++xi) {
        if (emul(xi, xi) != e_z)
          continue;
        if (emul(emul(einv(xa), xi), xa) != xi) // [xa, xi] = 1
          continue;
        if (emul(emul(einv(xb), xi), xb) != xi)
          continue;
        for (unsigned xj = 0; xj < 32; ++xj) {
          if (emul(xj, xj) != e_z)
            continue;
          if (emul(emul(einv(xi), xj), xi) != einv(xj)) // xj^xi = xj^-1
            continue;
          if (emul(emul(einv(xa), xj), xa) != xj)
            continue;
          if (emul(emul(einv(xb), xj), xb) != xj)
            continue;
          auto sol = intertwiners(
            F3, egens, {emats[xa], emats[xb], emats[xi], emats[xj]});
          if (sol.empty())
            continue;
          if (norm_seen.insert(key(sol[0])).second)
            normalizers.push_back(sol[0]);
        }
      }
    }
  }
  std::cout << "found " << normalizers.size() << " normalizing matrices\n";

  std::vector<Mat> ngens = egens;
  ngens.insert(ngens.end(), normalizers.begin(), normalizers.end());
  auto nfull = matrix_closure(F3, ngens, 20000);
  std::cout << "N_{GL_4(3)}(E) has order " << nfull.size() << "\n";

  // E:5 = <E, s> of order 160 with s of order 5
  std::set<MatKey> eset;
  for (const Mat &m : emats)
    eset.insert(key(m));
  Mat s5;
  bool found_s = false;
  for (const Mat &s : normalizers) {
    auto c = matrix_closure(F3, {ea, eb, ei, ej, s}, 2000);
    if (c.size() == 160) {
      s5 = s;
      found_s = true;
      break;
    }
  }
  if (!found_s) {
    std::cerr << "no E:5 found\n";
    return 1;
  }
  auto e5 = matrix_closure(F3, {ea, eb, ei, ej, s5}, 2000);
  std::set<MatKey> e5set;
  for (const Mat &m : e5)
    e5set.insert(key(m));

  // M = N_{N}(E:5), then the .4 and .2 extensions inside SL_4(3)
  std::vector<Mat> mset;
  for (const Mat &t : nfull) {
    Mat ti = mat_inverse(F3, t);
    bool norm = true;
    for (const Mat &g : {ea, eb, ei, ej, s5})
      if (!e5set.count(key(mat_mul(F3, mat_mul(F3, ti, g), t)))) {
        norm = false;
        break;
      }
    if (norm && mat_det(F3, t) == 1)
      mset.push_back(t);
  }
  std::cout << "N cap SL_4(3) normalizing E:5 has order " << mset.size() << "\n";
  if (mset.size() != 640) {
    std::cerr << "expected order 640\n";
    return 1;
  }
  Mat t4;
  bool found_t = false;
  for (const Mat &t : mset) {
    if (e5set.count(key(t)))
      continue;
    auto c = matrix_closure(F3, {ea, eb, ei, ej, s5, t}, 2000);
    if (c.size() == 640) {
      t4 = t;
      found_t = true;
      break;
    }
  }
  if (!found_t) {
    std::cerr << "no generator of the C4 extension found\n";
    return 1;
  }
  Mat t2 = mat_mul(F3, t4, t4);
  auto g2 = matrix_closure(F3, {ea, eb, ei, ej, s5, t2}, 2000);
  if (g2.size() != 320) {
    std::cerr << "(E:5).2 has order " << g2.size() << ", expected 320\n";
    return 1;
  }

  write_data_file(out_dir + "/e5_gl4_f3.dat", {3, 1, 4, {ea, eb, ei, ej, s5}});
  write_data_file(out_dir + "/e5x2_gl4_f3.dat",
                  {3, 1, 4, {ea, eb, ei, ej, s5, t2}});
  write_data_file(out_dir + "/e5x4_gl4_f3.dat",
                  {3, 1, 4, {ea, eb, ei, ej, s5, t4}});

  // engine-level verification of the shipped groups
  {
    auto h160 = affine_group_from_data({3, 1, 4, {ea, eb, ei, ej, s5}});
    auto h320 = affine_group_from_data({3, 1, 4, {ea, eb, ei, ej, s5, t2}});
    auto h640 = affine_group_from_data({3, 1, 4, {ea, eb, ei, ej, s5, t4}});
    std::cout << "3^4:(E:5)    order " << h160.order() << " (expect 12960)\n";
    std::cout << "3^4:((E:5).2) order " << h320.order() << " (expect 25920)\n";
    std::cout << "3^4:((E:5).4) order " << h640.order() << " (expect 51840)\n";
    auto d320 = derived_subgroup(h320);
    auto d640 = derived_subgroup(h640);
    std::cout << "derived of .2 == 3^4:(E:5): " << equals(d320, h160) << "\n";
    std::cout << "derived of .4 == 3^4:(E:5): " << equals(d640, h160) << "\n";
    auto lin160 = linear_group_from_data({3, 1, 4, {ea, eb, ei, ej, s5}});
    std::cout << "E:5 transitive on 80 nonzero vectors: " << lin160.is_transitive()
              << "\n";
    auto t9 = affine_group_from_data({3, 1, 2, {i3, j3}});
    std::cout << "3^2:Q8 order " << t9.order() << " (expect 72), 2-transitive "
              << is_k_transitive(t9, 2) << "\n";
    auto t25 = affine_group_from_data({5, 1, 2, {i5, j5, w5}});
    std::cout << "5^2:SL_2(3) order " << t25.order()
              << " (expect 600), 2-transitive " << is_k_transitive(t25, 2) << "\n";
  }
  return 0;
}
