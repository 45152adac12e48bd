#pragma once

#include <string>
#include <vector>

#include "evenlat/fqf.hpp"
#include "evenlat/linalg.hpp"

namespace evenlat {

/// Nondegenerate integral symmetric bilinear form on Z^n.
class Lattice {
public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram, std::vector<std::string> labels = {})
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (!gram_.square()) throw InvalidInput("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw InvalidInput("Gram matrix must be symmetric");
    if (!labels_.empty() && labels_.size() != gram_.rows()) throw InvalidInput("one label per basis vector");
    det_ = determinant(gram_);
    if (det_ == 0) throw DegenerateLattice("Gram matrix has zero determinant");
    even_ = true;
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      if (mod(gram_(i, i), Int(2)) != 0) even_ = false;
  }

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t rank() const { return gram_.rows(); }
  const Int& det() const { return det_; }
  bool is_even() const { return even_; }
  bool is_unimodular() const { return det_ == 1 || det_ == -1; }

  Int inner(const IntVector& x, const IntVector& y) const { return dot(x, gram_, y); }
  Int norm(const IntVector& x) const { return dot(x, gram_, x); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
  Int det_ = 1;
  bool even_ = true;
};

/// Sublattice given by ambient coordinates of its basis (columns).
struct Sublattice {
  Lattice ambient;
  IntMatrix basis;

  std::size_t rank() const { return basis.cols(); }
  IntMatrix gram() const { return basis.transpose() * ambient.gram() * basis; }
  /// The induced form as a lattice; throws DegenerateLattice if it is degenerate.
  Lattice lattice() const { return Lattice(gram()); }
};

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return Lattice(g, labels);
}

inline Lattice rescale(const Lattice& l, const Int& lambda) {
  if (lambda == 0) throw InvalidInput("rescaling factor must be nonzero");
  return Lattice(l.gram().scaled(lambda), l.labels());
}

/// Invariant factors d_i > 1 of L*/L, ascending.
inline std::vector<Int> discriminant_group(const Lattice& l) {
  SnfResult s = smith_normal_form(l.gram());
  std::vector<Int> out;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) out.push_back(s.D(i, i));
  return out;
}

/// The discriminant form together with the data needed to map dual vectors
/// (rational coordinates in the lattice basis) to generator coefficients.
struct DiscriminantData {
  FiniteQuadraticForm form;
  RatMatrix generators;  ///< column i = lift of g_i in L* (lattice-basis coordinates)
  IntMatrix U;           ///< from the Smith form U G V = D
  std::vector<std::size_t> rows;  ///< positions of the nontrivial invariant factors

  /// Coefficients of the class of y in L* on the generators g_i.
  IntVector coordinates(const Lattice& l, const RatVector& y) const {
    RatVector z(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t j = 0; j < l.rank(); ++j) z[i] += Rat(l.gram()(i, j)) * y[j];
    IntVector zi(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i].get_den() != 1) throw InvalidInput("vector is not in the dual lattice");
      zi[i] = z[i].get_num();
    }
    IntVector c(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Int s = 0;
      for (std::size_t j = 0; j < zi.size(); ++j) s += U(rows[k], j) * zi[j];
      c[k] = mod(s, form.orders[k]);
    }
    return c;
  }
};

namespace detail {

inline DiscriminantData discriminant_data(const Lattice& l, bool need_even) {
  if (need_even && !l.is_even()) throw OddLattice("discriminant quadratic form requires an even lattice");
  const IntMatrix& G = l.gram();
  SnfResult s = smith_normal_form(G);
  DiscriminantData out;
  out.U = s.U;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) idx.push_back(i);
  out.rows = idx;
  const std::size_t r = idx.size();
  out.generators = RatMatrix(l.rank(), r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t t = 0; t < l.rank(); ++t)
      out.generators(t, k) = Rat(s.V(t, idx[k])) / Rat(s.D(idx[k], idx[k]));
  IntMatrix W = s.V.transpose() * G * s.V;
  out.form.orders.resize(r);
  out.form.q.resize(r);
  out.form.b = RatMatrix(r, r);
  for (std::size_t a = 0; a < r; ++a) {
    const Int& da = s.D(idx[a], idx[a]);
    out.form.orders[a] = da;
    for (std::size_t c = 0; c < r; ++c) {
      const Int& dc = s.D(idx[c], idx[c]);
      out.form.b(a, c) = mod_rat(Rat(W(idx[a], idx[c])) / Rat(da * dc), Rat(1));
    }
    Rat qv = Rat(W(idx[a], idx[a])) / Rat(da * da);
    out.form.q[a] = need_even ? mod_rat(qv, Rat(2)) : mod_rat(qv, Rat(1));
  }
  return out;
}

} // namespace detail

inline DiscriminantData discriminant_data(const Lattice& l) { return detail::discriminant_data(l, true); }

inline FiniteQuadraticForm discriminant_form(const Lattice& l) { return discriminant_data(l).form; }

/// Bilinear discriminant form (valid for odd lattices too); q is reported mod 1.
inline FiniteQuadraticForm discriminant_bilinear_form(const Lattice& l) {
  return detail::discriminant_data(l, false).form;
}

inline Sublattice saturate(const Sublattice& sub) {
  if (rank(sub.basis) != sub.basis.cols()) throw InvalidInput("sublattice basis is not of full column rank");
  return Sublattice{sub.ambient, saturation_basis(sub.basis)};
}

/// Primitive basis of {x : x.s = 0 for all s in sub}.
inline Sublattice orthogonal_complement(const Sublattice& sub) {
  IntMatrix m = sub.basis.transpose() * sub.ambient.gram();
  return Sublattice{sub.ambient, integer_kernel(m)};
}

/// Basis (columns, in rational coordinates of L's basis) of the lattice spanned
/// by L and the given dual vectors.
inline RatMatrix overlattice_basis(const Lattice& l, const std::vector<RatVector>& glue) {
  const std::size_t n = l.rank();
  RatMatrix gens(n, n + glue.size());
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = 1;
  for (std::size_t j = 0; j < glue.size(); ++j) {
    if (glue[j].size() != n) throw InvalidInput("glue vector has the wrong length");
    for (std::size_t i = 0; i < n; ++i) gens(i, n + j) = glue[j][i];
  }
  return column_span_basis(gens);
}

/// Lattice generated by L and lifts of the glue classes; rejected unless even
/// (when L is even) and integral.
inline Lattice overlattice(const Lattice& l, const std::vector<RatVector>& glue) {
  if (glue.empty()) return l;
  RatMatrix b = overlattice_basis(l, glue);
  RatMatrix g = b.transpose() * to_rational(l.gram()) * b;
  if (!is_integral(g)) throw InvalidInput("glue is not integral: b(x,y) not in Z");
  IntMatrix gi = to_integer(g);
  Lattice out(gi);
  if (l.is_even() && !out.is_even()) throw InvalidInput("glue is not isotropic: overlattice is not even");
  return out;
}

} // namespace evenlat
