#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "derivant/actions.hpp"
#include "derivant/perm.hpp"
#include "derivant/perm_group.hpp"
#include "derivant/quotient.hpp"
#include "derivant/structure.hpp"

namespace derivant {

// ---------------------------------------------------------------------------
// small finite fields
// ---------------------------------------------------------------------------

/// GF(p^f) with elements encoded as 0..q-1 (base-p digits = polynomial
/// coefficients, constant term least significant).  Moduli are fixed Conway
/// polynomials so that every downstream point labeling is reproducible.
class Fq {
public:
  Fq(unsigned p, unsigned f) : p_(p), f_(f) {
    if (p < 2 || !is_prime(p))
      throw group_error("field characteristic must be prime");
    if (f < 1)
      throw group_error("field exponent must be positive");
    q_ = 1;
    for (unsigned i = 0; i < f; ++i) {
      q_ *= p;
      if (q_ > 49)
        throw group_error("field size capped at 49");
    }
    modulus_ = conway(p, f);
    verify_irreducible();
    build_tables();
  }

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned> &modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const {
    if (a == 0)
      throw group_error("division by zero in field");
    return inv_[a];
  }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  unsigned pow(unsigned a, std::uint64_t e) const {
    unsigned r = 1;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// x -> x^p, the Frobenius automorphism.
  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  /// Fixed primitive element: the smallest generator of the unit group.
  unsigned primitive() const { return primitive_; }

private:
  static bool is_prime(unsigned n) {
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0)
        return false;
    return n >= 2;
  }

  // Conway polynomial coefficients (constant first, monic leading implied).
  static std::vector<unsigned> conway(unsigned p, unsigned f) {
    if (f == 1)
      return {0}; // x - 0? unused for prime fields
    struct Entry {
      unsigned p, f;
      std::vector<unsigned> coeffs;
    };
    // x^f + c_{f-1} x^{f-1} + ... + c_0, stored as {c_0, ..., c_{f-1}}
    static const std::vector<Entry> table = {
      {2, 2, {1, 1}},          // x^2+x+1
      {2, 3, {1, 1, 0}},       // x^3+x+1
      {2, 4, {1, 1, 0, 0}},    // x^4+x+1
      {2, 5, {1, 0, 1, 0, 0}}, // x^5+x^2+1
      {3, 2, {2, 2}},          // x^2+2x+2
      {3, 3, {1, 2, 0}},       // x^3+2x+1
      {5, 2, {2, 4}},          // x^2+4x+2
      {7, 2, {3, 6}},          // x^2+6x+3
    };
    for (const Entry &e : table)
      if (e.p == p && e.f == f)
        return e.coeffs;
    throw group_error("no modulus shipped for GF(" + std::to_string(p) + "^" +
                      std::to_string(f) + ")");
  }

  // digits of e base p, little-endian, length f
  std::vector<unsigned> digits(unsigned e) const {
    std::vector<unsigned> d(f_);
    for (unsigned i = 0; i < f_; ++i) {
      d[i] = e % p_;
      e /= p_;
    }
    return d;
  }

  unsigned undigits(const std::vector<unsigned> &d) const {
    unsigned e = 0;
    for (unsigned i = f_; i-- > 0;)
      e = e * p_ + d[i] % p_;
    return e;
  }

  unsigned poly_mul(unsigned a, unsigned b) const {
    if (f_ == 1)
      return (a * b) % p_;
    std::vector<unsigned> da = digits(a), db = digits(b);
    std::vector<unsigned> prod(2 * f_ - 1, 0);
    for (unsigned i = 0; i < f_; ++i)
      for (unsigned j = 0; j < f_; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce by x^f = -modulus tail
    for (unsigned k = 2 * f_ - 2; k >= f_; --k) {
      unsigned c = prod[k];
      if (c) {
        prod[k] = 0;
        for (unsigned i = 0; i < f_; ++i)
          prod[k - f_ + i] =
            (prod[k - f_ + i] + c * (p_ - modulus_[i] % p_)) % p_;
      }
      if (k == f_)
        break;
    }
    prod.resize(f_);
    return undigits(prod);
  }

  void verify_irreducible() {
    if (f_ == 1)
      return;
    // no roots (kills all factorizations with a linear factor, i.e. f <= 3)
    for (unsigned x = 0; x < p_; ++x) {
      // evaluate x^f + sum c_i x^i
      unsigned acc = modulus_[0];
      unsigned xp = 1;
      for (unsigned i = 1; i < f_; ++i) {
        xp = (xp * x) % p_;
        acc = (acc + modulus_[i] * xp) % p_;
      }
      xp = (xp * x) % p_;
      if ((acc + xp) % p_ == 0)
        throw group_error("reducible modulus (root found)");
    }
    if (f_ >= 4) {
      // no monic quadratic factor: trial-divide by all monic quadratics
      for (unsigned b = 0; b < p_; ++b)
        for (unsigned c = 0; c < p_; ++c)
          if (divides_quadratic(b, c))
            throw group_error("reducible modulus (quadratic factor)");
    }
  }

  bool divides_quadratic(unsigned b, unsigned c) const {
    // synthetic division of x^f + modulus tail by x^2 + b x + c over F_p
    std::vector<unsigned> poly(f_ + 1, 0);
    for (unsigned i = 0; i < f_; ++i)
      poly[i] = modulus_[i] % p_;
    poly[f_] = 1;
    for (unsigned k = f_; k >= 2; --k) {
      unsigned coef = poly[k];
      if (!coef)
        continue;
      poly[k] = 0;
      poly[k - 1] = (poly[k - 1] + (p_ - (coef * b) % p_)) % p_;
      poly[k - 2] = (poly[k - 2] + (p_ - (coef * c) % p_)) % p_;
    }
    return poly[0] == 0 && poly[1] == 0;
  }

  void build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      std::vector<unsigned> da = digits(a);
      for (unsigned i = 0; i < f_; ++i)
        da[i] = (p_ - da[i] % p_) % p_;
      neg_[a] = undigits(da);
      for (unsigned b = 0; b < q_; ++b) {
        std::vector<unsigned> s = digits(a), db = digits(b);
        for (unsigned i = 0; i < f_; ++i)
          s[i] = (s[i] + db[i]) % p_;
        add_[a * q_ + b] = undigits(s);
        mul_[a * q_ + b] = poly_mul(a, b);
      }
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) {
          inv_[a] = b;
          break;
        }
    primitive_ = 0;
    for (unsigned a = 2; a < q_; ++a) {
      unsigned x = a;
      unsigned ord = 1;
      while (x != 1) {
        x = mul(x, a);
        ++ord;
      }
      if (ord == q_ - 1) {
        primitive_ = a;
        break;
      }
    }
    if (q_ > 2 && primitive_ == 0)
      throw group_error("no primitive element found (multiplicative group not cyclic?)");
    if (q_ == 2)
      primitive_ = 1;
  }

  unsigned p_, f_, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned primitive_ = 0;
};

// ---------------------------------------------------------------------------
// matrices over Fq and their permutation actions
// ---------------------------------------------------------------------------

/// Row-major d x d matrix over a small field; entries are field codes.
struct Mat {
  unsigned d = 0;
  std::vector<unsigned> a;

  Mat() = default;
  Mat(unsigned d) : d(d), a(d * d, 0) {}

  unsigned &at(unsigned i, unsigned j) { return a[i * d + j]; }
  unsigned at(unsigned i, unsigned j) const { return a[i * d + j]; }

  static Mat identity(unsigned d) {
    Mat m(d);
    for (unsigned i = 0; i < d; ++i)
      m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const Mat &x, const Mat &y) {
    return x.d == y.d && x.a == y.a;
  }
};

inline Mat mat_mul(const Fq &F, const Mat &x, const Mat &y) {
  Mat r(x.d);
  for (unsigned i = 0; i < x.d; ++i)
    for (unsigned k = 0; k < x.d; ++k) {
      unsigned xik = x.at(i, k);
      if (!xik)
        continue;
      for (unsigned j = 0; j < x.d; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(xik, y.at(k, j)));
    }
  return r;
}

inline Mat mat_transpose(const Mat &x) {
  Mat r(x.d);
  for (unsigned i = 0; i < x.d; ++i)
    for (unsigned j = 0; j < x.d; ++j)
      r.at(j, i) = x.at(i, j);
  return r;
}

inline unsigned mat_det(const Fq &F, Mat x) {
  unsigned det = 1;
  for (unsigned col = 0; col < x.d; ++col) {
    unsigned pivot = col;
    while (pivot < x.d && x.at(pivot, col) == 0)
      ++pivot;
    if (pivot == x.d)
      return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < x.d; ++j)
        std::swap(x.a[pivot * x.d + j], x.a[col * x.d + j]);
      det = F.mul(det, F.neg(1));
    }
    unsigned pv = x.at(col, col);
    det = F.mul(det, pv);
    unsigned pv_inv = F.inv(pv);
    for (unsigned r = col + 1; r < x.d; ++r) {
      unsigned factor = F.mul(x.at(r, col), pv_inv);
      if (!factor)
        continue;
      for (unsigned j = col; j < x.d; ++j)
        x.at(r, j) = F.sub(x.at(r, j), F.mul(factor, x.at(col, j)));
    }
  }
  return det;
}

inline Mat mat_inverse(const Fq &F, Mat x) {
  unsigned d = x.d;
  Mat inv = Mat::identity(d);
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && x.at(pivot, col) == 0)
      ++pivot;
    if (pivot == d)
      throw group_error("singular matrix");
    if (pivot != col)
      for (unsigned j = 0; j < d; ++j) {
        std::swap(x.a[pivot * d + j], x.a[col * d + j]);
        std::swap(inv.a[pivot * d + j], inv.a[col * d + j]);
      }
    unsigned pv_inv = F.inv(x.at(col, col));
    for (unsigned j = 0; j < d; ++j) {
      x.at(col, j) = F.mul(x.at(col, j), pv_inv);
      inv.at(col, j) = F.mul(inv.at(col, j), pv_inv);
    }
    for (unsigned r = 0; r < d; ++r) {
      if (r == col)
        continue;
      unsigned factor = x.at(r, col);
      if (!factor)
        continue;
      for (unsigned j = 0; j < d; ++j) {
        x.at(r, j) = F.sub(x.at(r, j), F.mul(factor, x.at(col, j)));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

namespace detail {

/// Affine point labeling: vector (v_0..v_{d-1}) <-> index sum v_i q^i.
inline std::vector<unsigned> vec_of_index(unsigned idx, unsigned d, unsigned q) {
  std::vector<unsigned> v(d);
  for (unsigned i = 0; i < d; ++i) {
    v[i] = idx % q;
    idx /= q;
  }
  return v;
}

inline unsigned index_of_vec(const std::vector<unsigned> &v, unsigned q) {
  unsigned idx = 0;
  for (unsigned i = static_cast<unsigned>(v.size()); i-- > 0;)
    idx = idx * q + v[i];
  return idx;
}

inline std::vector<unsigned> apply_mat_row(const Fq &F, const std::vector<unsigned> &v,
                                           const Mat &m) {
  std::vector<unsigned> w(m.d, 0);
  for (unsigned j = 0; j < m.d; ++j)
    for (unsigned i = 0; i < m.d; ++i)
      w[j] = F.add(w[j], F.mul(v[i], m.at(i, j)));
  return w;
}

/// Projective normalization: scale so the first nonzero coordinate is 1.
inline std::vector<unsigned> normalize_projective(const Fq &F,
                                                  std::vector<unsigned> v) {
  for (unsigned i = 0; i < v.size(); ++i)
    if (v[i]) {
      unsigned s = F.inv(v[i]);
      for (unsigned j = 0; j < v.size(); ++j)
        v[j] = F.mul(v[j], s);
      return v;
    }
  throw group_error("zero vector has no projective point");
}

/// All projective points in lexicographic order of their normal forms.
inline std::vector<std::vector<unsigned>> projective_points(const Fq &F, unsigned d) {
  std::vector<std::vector<unsigned>> pts;
  unsigned total = 1;
  for (unsigned i = 0; i < d; ++i)
    total *= F.q();
  std::vector<bool> seen(total, false);
  for (unsigned idx = 1; idx < total; ++idx) {
    std::vector<unsigned> v = vec_of_index(idx, d, F.q());
    std::vector<unsigned> n = normalize_projective(F, v);
    unsigned ni = index_of_vec(n, F.q());
    if (!seen[ni]) {
      seen[ni] = true;
      pts.push_back(std::move(n));
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

} // namespace detail

/// Permutation induced by a matrix on the q^d affine points (row vectors,
/// acting from the right: v -> v*M).
inline Perm affine_perm_of_matrix(const Fq &F, const Mat &m) {
  unsigned q = F.q(), d = m.d;
  unsigned total = 1;
  for (unsigned i = 0; i < d; ++i)
    total *= q;
  std::vector<Point> img(total);
  for (unsigned idx = 0; idx < total; ++idx) {
    auto v = detail::vec_of_index(idx, d, q);
    img[idx] = static_cast<Point>(detail::index_of_vec(detail::apply_mat_row(F, v, m), q));
  }
  return Perm(std::move(img));
}

inline Perm translation_perm(const Fq &F, unsigned d, const std::vector<unsigned> &t) {
  unsigned q = F.q();
  unsigned total = 1;
  for (unsigned i = 0; i < d; ++i)
    total *= q;
  std::vector<Point> img(total);
  for (unsigned idx = 0; idx < total; ++idx) {
    auto v = detail::vec_of_index(idx, d, q);
    for (unsigned i = 0; i < d; ++i)
      v[i] = F.add(v[i], t[i]);
    img[idx] = static_cast<Point>(detail::index_of_vec(v, q));
  }
  return Perm(std::move(img));
}

/// Affine group q^d : <matrices> on q^d points.  Translations are generated
/// by the full F_p-basis z^j e_i (the additive group is elementary abelian
/// of rank d*f, not d).
inline PermGroup affine_group(const Fq &F, unsigned d, const std::vector<Mat> &mats,
                              bool with_translations = true) {
  std::vector<Perm> gens;
  unsigned total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= F.q();
    if (total > 10000)
      throw group_error("affine action degree exceeds 10^4");
  }
  if (with_translations)
    for (unsigned i = 0; i < d; ++i) {
      unsigned zj = 1;
      for (unsigned j = 0; j < F.f(); ++j) {
        std::vector<unsigned> t(d, 0);
        t[i] = zj;
        gens.push_back(translation_perm(F, d, t));
        zj = F.mul(zj, F.primitive());
      }
    }
  for (const Mat &m : mats)
    gens.push_back(affine_perm_of_matrix(F, m));
  return PermGroup(total, std::move(gens));
}

/// Matrix group action on the q^d - 1 nonzero vectors.
inline PermGroup nonzero_vector_action(const Fq &F, unsigned d,
                                       const std::vector<Mat> &mats) {
  unsigned total = 1;
  for (unsigned i = 0; i < d; ++i)
    total *= F.q();
  std::vector<Perm> gens;
  for (const Mat &m : mats) {
    std::vector<Point> img(total - 1);
    for (unsigned idx = 1; idx < total; ++idx) {
      auto v = detail::vec_of_index(idx, d, F.q());
      img[idx - 1] = static_cast<Point>(
        detail::index_of_vec(detail::apply_mat_row(F, v, m), F.q()) - 1);
    }
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(total - 1, std::move(gens));
}

/// Projective action of matrices (plus optionally the Frobenius map) on the
/// (q^d-1)/(q-1) projective points.
inline PermGroup projective_action(const Fq &F, unsigned d,
                                   const std::vector<Mat> &mats,
                                   bool with_frobenius = false) {
  if (d < 2)
    throw group_error("projective action requires d >= 2");
  auto pts = detail::projective_points(F, d);
  std::unordered_map<unsigned, Point> index;
  for (std::size_t i = 0; i < pts.size(); ++i)
    index.emplace(detail::index_of_vec(pts[i], F.q()), static_cast<Point>(i));

  std::vector<Perm> gens;
  for (const Mat &m : mats) {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto w = detail::normalize_projective(F, detail::apply_mat_row(F, pts[i], m));
      img[i] = index.at(detail::index_of_vec(w, F.q()));
    }
    gens.push_back(Perm(std::move(img)));
  }
  if (with_frobenius && F.f() > 1) {
    std::vector<Point> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<unsigned> w = pts[i];
      for (unsigned &c : w)
        c = F.frobenius(c);
      w = detail::normalize_projective(F, w);
      img[i] = index.at(detail::index_of_vec(w, F.q()));
    }
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(pts.size(), std::move(gens));
}

/// Standard generator matrices: transvections I + z^k E_01 (one per basis
/// power of the primitive element, so the full additive parameter group is
/// reached over non-prime fields), a sign-adjusted basis cycle, and for GL a
/// primitive diagonal.
inline std::vector<Mat> sl_generator_matrices(const Fq &F, unsigned d) {
  if (d < 2)
    throw group_error("SL generators require d >= 2");
  std::vector<Mat> gens;
  unsigned zk = 1;
  for (unsigned k = 0; k < F.f(); ++k) {
    Mat t = Mat::identity(d);
    t.at(0, 1) = zk;
    gens.push_back(t);
    zk = F.mul(zk, F.primitive());
  }
  Mat c(d);
  for (unsigned i = 0; i + 1 < d; ++i)
    c.at(i, i + 1) = 1;
  c.at(d - 1, 0) = (d % 2 == 0) ? F.neg(1) : 1; // det +1
  gens.push_back(c);
  return gens;
}

inline std::vector<Mat> gl_generator_matrices(const Fq &F, unsigned d) {
  std::vector<Mat> gens;
  if (d >= 2)
    gens = sl_generator_matrices(F, d);
  Mat diag = Mat::identity(d);
  diag.at(0, 0) = F.primitive();
  gens.push_back(diag);
  return gens;
}

// ---------------------------------------------------------------------------
// named families
// ---------------------------------------------------------------------------

inline PermGroup cyclic(unsigned n) {
  if (n < 1)
    throw group_error("cyclic group order must be >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<Point> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(std::move(img))});
}

inline PermGroup symmetric(unsigned n) {
  if (n < 1)
    throw group_error("symmetric group degree must be >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<Point> cyc(n), swp(n);
  for (unsigned i = 0; i < n; ++i) {
    cyc[i] = static_cast<Point>((i + 1) % n);
    swp[i] = static_cast<Point>(i);
  }
  std::swap(swp[0], swp[1]);
  return PermGroup(n, {Perm(std::move(cyc)), Perm(std::move(swp))});
}

inline PermGroup alternating(unsigned n) {
  if (n < 1)
    throw group_error("alternating group degree must be >= 1");
  if (n <= 2)
    return PermGroup::trivial(std::max(1u, n));
  std::vector<Perm> gens;
  for (unsigned i = 2; i < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

/// Dihedral group of the given order 2n, acting on n points.
inline PermGroup dihedral(unsigned order) {
  if (order < 2 || order % 2)
    throw group_error("dihedral order must be even and >= 2");
  unsigned n = order / 2;
  if (n == 1)
    return cyclic(2);
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n); // fixes point 0
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

inline Perm embed_left(const Perm &p, std::size_t total) {
  std::vector<Point> img(total);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i)
    img[i] = p[static_cast<Point>(i)];
  return Perm(std::move(img));
}

inline Perm embed_shifted(const Perm &p, std::size_t total, std::size_t shift) {
  std::vector<Point> img(total);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < p.degree(); ++i)
    img[shift + i] = static_cast<Point>(shift + p[static_cast<Point>(i)]);
  return Perm(std::move(img));
}

inline PermGroup direct_product(const PermGroup &a, const PermGroup &b) {
  std::size_t total = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm &g : a.generators())
    gens.push_back(embed_left(g, total));
  for (const Perm &g : b.generators())
    gens.push_back(embed_shifted(g, total, a.degree()));
  return PermGroup(total, std::move(gens));
}

/// Imprimitive wreath product A wr S_k on deg(A)*k points
/// (order |A|^k * k!).
inline PermGroup wreath_imprimitive(const PermGroup &a, unsigned k) {
  if (k < 1)
    throw group_error("wreath product requires k >= 1");
  std::size_t m = a.degree();
  std::size_t total = m * k;
  std::vector<Perm> gens;
  for (const Perm &g : a.generators())
    gens.push_back(embed_left(g, total));
  if (k >= 2) {
    // block swap (0 1)
    std::vector<Point> swp(total);
    std::iota(swp.begin(), swp.end(), Point{0});
    for (std::size_t i = 0; i < m; ++i) {
      swp[i] = static_cast<Point>(m + i);
      swp[m + i] = static_cast<Point>(i);
    }
    gens.push_back(Perm(std::move(swp)));
    if (k >= 3) {
      std::vector<Point> cyc(total);
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < m; ++i)
          cyc[b * m + i] = static_cast<Point>(((b + 1) % k) * m + i);
      gens.push_back(Perm(std::move(cyc)));
    }
  }
  return PermGroup(total, std::move(gens));
}

/// Quaternion group on 8 points (right-regular action, points labeled
/// 1,i,-1,-i,j,k,-j,-k).
inline PermGroup quaternion8() {
  Perm i = parse_cycles("(1 2 3 4)(5 8 7 6)", 8);
  Perm j = parse_cycles("(1 5 3 7)(2 6 4 8)", 8);
  return PermGroup(8, {i, j});
}

/// A group together with its designated central involution (for building
/// central products).
struct GroupWithCenter {
  PermGroup group;
  Perm central_involution;
};

/// Central product identifying the two central involutions; realized as the
/// coset action of (A x B) / <z_A z_B>.
inline GroupWithCenter central_product(const GroupWithCenter &a,
                                       const GroupWithCenter &b) {
  PermGroup prod = direct_product(a.group, b.group);
  std::size_t total = prod.degree();
  Perm za = embed_left(a.central_involution, total);
  Perm zb = embed_shifted(b.central_involution, total, a.group.degree());
  PermGroup kernel(total, {za * zb});
  QuotientRep qr(prod, kernel);
  Perm z = qr.project(za);
  return {qr.quotient_group(), z};
}

inline GroupWithCenter d8_with_center() {
  PermGroup d8 = dihedral(8);
  return {d8, parse_cycles("(1 3)(2 4)", 4)};
}

inline GroupWithCenter q8_with_center() {
  return {quaternion8(), parse_cycles("(1 3)(2 4)(5 7)(6 8)", 8)};
}

/// Extraspecial 2-group of order 2^(2m+1): plus type is the central product
/// of m copies of D8, minus type swaps one D8 for Q8.
inline PermGroup extraspecial2(unsigned m, char sign) {
  if (m < 1)
    throw group_error("extraspecial2 requires m >= 1");
  if (sign != '+' && sign != '-')
    throw group_error("extraspecial2 sign must be '+' or '-'");
  GroupWithCenter acc = (sign == '-') ? q8_with_center() : d8_with_center();
  for (unsigned i = 1; i < m; ++i)
    acc = central_product(acc, d8_with_center());
  return acc.group;
}

/// D8 o Q8, the minus-type extraspecial group of order 32.
inline PermGroup central_product_d8_q8() { return extraspecial2(2, '-'); }

/// Metacyclic group <x, y | x^m, y^n, x^y = x^r> acting on Z_m x Z_n;
/// requires r^n = 1 (mod m).  The result carries a tag designating the
/// normal cyclic subgroup <x>, which enables the metacyclic fast path.
inline PermGroup metacyclic(unsigned m, unsigned n, unsigned r) {
  if (m < 1 || n < 1)
    throw group_error("metacyclic parameters must be positive");
  r %= m;
  std::uint64_t rn = 1;
  for (unsigned i = 0; i < n; ++i)
    rn = (rn * r) % m;
  if (m > 1 && rn != 1 % m)
    throw group_error("metacyclic requires r^n = 1 (mod m)");
  std::size_t total = std::size_t{m} * n;
  auto idx = [&](unsigned a, unsigned b) { return std::size_t{b} * m + a; };
  std::vector<Point> ximg(total), yimg(total);
  for (unsigned b = 0; b < n; ++b)
    for (unsigned a = 0; a < m; ++a) {
      ximg[idx(a, b)] = static_cast<Point>(idx((a + 1) % m, b));
      yimg[idx(a, b)] = static_cast<Point>(idx((a * r) % m, (b + 1) % n));
    }
  Perm x(std::move(ximg)), y(std::move(yimg));
  PermGroup g(total, {x, y});
  if (g.order() != std::uint64_t{m} * n)
    throw group_error("metacyclic construction produced wrong order");
  g.metacyclic_tag = MetacyclicTag{m, n, r, x, y};
  return g;
}

/// The outer-automorphism-shape group
///   < delta, phi, iota | delta^d = phi^f = iota^2 = 1,
///     delta^phi = delta^p, delta^iota = delta^-1, [phi, iota] = 1 >
/// realized faithfully on Z_g x Z_f x Z_2, where g = gcd(d, p^f - 1) is the
/// order the relations force on delta (phi^f = 1 collapses delta^(p^f - 1)).
/// For the presentation's intended parameters p^f = 1 (mod d), g = d and the
/// order is 2df.  Generators are returned in the order delta, phi, iota.
inline PermGroup out_group(unsigned d, unsigned f, unsigned p) {
  if (d < 1 || f < 1 || p < 1)
    throw group_error("out_group parameters must be positive");
  std::uint64_t pf = 1;
  for (unsigned i = 0; i < f; ++i)
    pf = (pf * p) % d;
  unsigned g = static_cast<unsigned>(std::gcd<std::uint64_t>(d, (pf + d - 1) % d));
  std::size_t total = std::size_t{g} * f * 2;
  auto idx = [&](unsigned a, unsigned b, unsigned c) {
    return (std::size_t{c} * f + b) * g + a;
  };
  std::vector<Point> di(total), ph(total), io(total);
  for (unsigned c = 0; c < 2; ++c)
    for (unsigned b = 0; b < f; ++b)
      for (unsigned a = 0; a < g; ++a) {
        di[idx(a, b, c)] = static_cast<Point>(idx((a + 1) % g, b, c));
        ph[idx(a, b, c)] = static_cast<Point>(idx((a * (p % g)) % g, (b + 1) % f, c));
        io[idx(a, b, c)] = static_cast<Point>(idx((g - a) % g, b, (c + 1) % 2));
      }
  return PermGroup(total, {Perm(std::move(di)), Perm(std::move(ph)), Perm(std::move(io))});
}

// affine linear / semilinear families --------------------------------------

inline Fq field_of(unsigned q_size) {
  for (unsigned p = 2; p <= q_size; ++p) {
    bool prime = true;
    for (unsigned t = 2; t * t <= p; ++t)
      if (p % t == 0)
        prime = false;
    if (!prime)
      continue;
    unsigned v = 1;
    for (unsigned f = 1; f <= 6; ++f) {
      v *= p;
      if (v == q_size)
        return Fq(p, f);
      if (v > q_size)
        break;
    }
  }
  throw group_error(std::to_string(q_size) + " is not a supported prime power");
}

inline PermGroup agl(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  if (d == 1) {
    // translations + multiplication by a primitive element
    Mat m(1);
    m.at(0, 0) = F.primitive();
    return affine_group(F, 1, {m});
  }
  return affine_group(F, d, gl_generator_matrices(F, d));
}

inline PermGroup asl(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  if (d == 1)
    return affine_group(F, 1, {}); // SL_1(q) is trivial: translations only
  return affine_group(F, d, sl_generator_matrices(F, d));
}

/// Frobenius x -> x^p on the q affine points of the line.
inline Perm frobenius_affine_perm(const Fq &F) {
  std::vector<Point> img(F.q());
  for (unsigned x = 0; x < F.q(); ++x)
    img[x] = static_cast<Point>(F.frobenius(x));
  return Perm(std::move(img));
}

/// AGammaL_1(q) = q : (q-1) : f on q points.
inline PermGroup agammal1(unsigned q_size) {
  Fq F = field_of(q_size);
  Mat m(1);
  m.at(0, 0) = F.primitive();
  std::vector<Perm> gens = affine_group(F, 1, {m}).generators();
  if (F.f() > 1)
    gens.push_back(frobenius_affine_perm(F));
  return PermGroup(F.q(), std::move(gens));
}

/// The squares-multiplier affine group q : ((q-1)/2), the index-2 subgroup
/// of AGL_1(q); 2-homogeneous but not 2-transitive when q = 3 (mod 4).
/// Shipped under its own name because the literature's "ASL_1(q)" is read
/// both ways.
inline PermGroup agl1_squares(unsigned q_size) {
  Fq F = field_of(q_size);
  if (F.q() % 2 == 0)
    throw group_error("agl1_squares requires odd q");
  Mat m(1);
  m.at(0, 0) = F.mul(F.primitive(), F.primitive());
  return affine_group(F, 1, {m});
}

inline PermGroup gl(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  if (d == 1) {
    Mat m(1);
    m.at(0, 0) = F.primitive();
    return nonzero_vector_action(F, 1, {m});
  }
  return nonzero_vector_action(F, d, gl_generator_matrices(F, d));
}

inline PermGroup sl(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  if (d < 2)
    throw group_error("sl requires d >= 2");
  return nonzero_vector_action(F, d, sl_generator_matrices(F, d));
}

inline PermGroup psl(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  return projective_action(F, d, sl_generator_matrices(F, d));
}

inline PermGroup pgl(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  return projective_action(F, d, gl_generator_matrices(F, d));
}

inline PermGroup pgammal(unsigned d, unsigned q_size) {
  Fq F = field_of(q_size);
  return projective_action(F, d, gl_generator_matrices(F, d), true);
}

/// Hol(G) for an abstract elementary abelian p^d (= AGL_d(p) on p^d points)
/// or cyclic n (= n : Aut(C_n) on n points).
inline PermGroup holomorph_elementary(unsigned p, unsigned d) {
  return agl(d, p);
}

inline PermGroup holomorph_cyclic(unsigned n) {
  if (n < 1)
    throw group_error("holomorph_cyclic requires n >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<Perm> gens;
  std::vector<Point> t(n);
  for (unsigned i = 0; i < n; ++i)
    t[i] = static_cast<Point>((i + 1) % n);
  gens.push_back(Perm(std::move(t)));
  for (unsigned u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1)
      continue;
    std::vector<Point> m(n);
    for (unsigned i = 0; i < n; ++i)
      m[i] = static_cast<Point>((std::uint64_t{u} * i) % n);
    gens.push_back(Perm(std::move(m)));
  }
  return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Aut(PSL_3(7)) on points + lines
// ---------------------------------------------------------------------------

/// Aut(PSL_3(q)) for q prime, acting on the 2*(q^2+q+1) projective points
/// and lines: PGL_3(q) preserves the two blocks, the graph involution is the
/// point/line duality (conjugating matrices to their inverse-transpose).
/// Only q = 7 is shipped.
inline PermGroup aut_psl3_points_lines(unsigned q_size = 7) {
  if (q_size != 7)
    throw group_error("aut_psl3_points_lines ships only q = 7");
  Fq F = field_of(q_size);
  unsigned d = 3;
  auto pts = detail::projective_points(F, d);
  std::size_t half = pts.size();
  std::unordered_map<unsigned, Point> index;
  for (std::size_t i = 0; i < half; ++i)
    index.emplace(detail::index_of_vec(pts[i], F.q()), static_cast<Point>(i));

  std::vector<Perm> gens;
  for (const Mat &m : gl_generator_matrices(F, d)) {
    Mat mit = mat_transpose(mat_inverse(F, m));
    std::vector<Point> img(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      auto w = detail::normalize_projective(F, detail::apply_mat_row(F, pts[i], m));
      img[i] = index.at(detail::index_of_vec(w, F.q()));
      auto l = detail::normalize_projective(F, detail::apply_mat_row(F, pts[i], mit));
      img[half + i] =
        static_cast<Point>(half + index.at(detail::index_of_vec(l, F.q())));
    }
    gens.push_back(Perm(std::move(img)));
  }
  // duality: swap each point with the line of the same coordinates
  std::vector<Point> tau(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    tau[i] = static_cast<Point>(half + i);
    tau[half + i] = static_cast<Point>(i);
  }
  gens.push_back(Perm(std::move(tau)));
  return PermGroup(2 * half, std::move(gens));
}

/// PSL_3(q) in the same 114-point action (socle of the above).
inline PermGroup psl3_points_lines(unsigned q_size = 7) {
  if (q_size != 7)
    throw group_error("psl3_points_lines ships only q = 7");
  Fq F = field_of(q_size);
  unsigned d = 3;
  auto pts = detail::projective_points(F, d);
  std::size_t half = pts.size();
  std::unordered_map<unsigned, Point> index;
  for (std::size_t i = 0; i < half; ++i)
    index.emplace(detail::index_of_vec(pts[i], F.q()), static_cast<Point>(i));
  std::vector<Perm> gens;
  for (const Mat &m : sl_generator_matrices(F, d)) {
    Mat mit = mat_transpose(mat_inverse(F, m));
    std::vector<Point> img(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      auto w = detail::normalize_projective(F, detail::apply_mat_row(F, pts[i], m));
      img[i] = index.at(detail::index_of_vec(w, F.q()));
      auto l = detail::normalize_projective(F, detail::apply_mat_row(F, pts[i], mit));
      img[half + i] =
        static_cast<Point>(half + index.at(detail::index_of_vec(l, F.q())));
    }
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup(2 * half, std::move(gens));
}

} // namespace derivant
