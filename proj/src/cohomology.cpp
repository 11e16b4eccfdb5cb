#include "prank/cohomology.hpp"

namespace prank {

size_t pair_count(size_t dim) { return dim * (dim - 1) / 2; }
size_t triple_count(size_t dim) { return dim * (dim - 1) * (dim - 2) / 6; }

size_t pair_index(size_t dim, size_t i, size_t j) {
  // pairs in lex order: (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

size_t triple_index(size_t dim, size_t i, size_t j, size_t l) {
  size_t idx = 0;
  // triples in lex order
  for (size_t a = 0; a < i; ++a) idx += (dim - a - 1) * (dim - a - 2) / 2;
  idx += pair_index(dim - i - 1, j - i - 1, l - i - 1);
  return idx;
}

uint32_t Cochain::at2(size_t i, size_t j) const {
  const FieldCtx* F = A->field();
  if (i == j) return 0;
  if (i < j) return comps[pair_index(A->dim(), i, j)];
  return F->neg(comps[pair_index(A->dim(), j, i)]);
}

uint32_t Cochain::at3(size_t i, size_t j, size_t l) const {
  return comps[triple_index(A->dim(), i, j, l)];
}

Cochain make_cochain1(const Algebra& A, const Vec& comps) {
  if (comps.size() != A.dim()) throw shape_error("make_cochain1: wrong length");
  return Cochain{&A, 1, comps};
}

Cochain make_cochain2(const Algebra& A, const Vec& comps) {
  if (comps.size() != pair_count(A.dim())) throw shape_error("make_cochain2: wrong length");
  return Cochain{&A, 2, comps};
}

Cochain cochain2_from_matrix(const Algebra& A, const Mat& m) {
  const FieldCtx* F = A.field();
  size_t n = A.dim();
  if (m.rows() != n || m.cols() != n) throw shape_error("cochain2_from_matrix: wrong shape");
  for (size_t i = 0; i < n; ++i) {
    if (m.at(i, i) != 0) throw precondition_error("cochain2_from_matrix: nonzero diagonal");
    for (size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) != F->neg(m.at(j, i)))
        throw precondition_error("cochain2_from_matrix: not antisymmetric");
  }
  Vec comps(F, pair_count(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) comps.set(pair_index(n, i, j), m.at(i, j));
  return make_cochain2(A, comps);
}

// evaluate a degree-2 cochain on (v, b_l) where v is a coordinate vector
static uint32_t eval2(const Cochain& c, const Vec& v, size_t l) {
  const FieldCtx* F = c.A->field();
  uint32_t acc = 0;
  for (size_t m = 0; m < v.size(); ++m)
    if (v[m]) acc = F->add(acc, F->mul(v[m], c.at2(m, l)));
  return acc;
}

Cochain differential(const Cochain& c) {
  const Algebra& A = *c.A;
  const FieldCtx* F = A.field();
  size_t n = A.dim();
  if (c.degree == 1) {
    Vec out(F, pair_count(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Vec br = A.bracket_basis(i, j, F);
        uint32_t acc = 0;
        for (size_t m = 0; m < n; ++m)
          if (br[m]) acc = F->add(acc, F->mul(br[m], c.at1(m)));
        out.set(pair_index(n, i, j), F->neg(acc));
      }
    return make_cochain2(A, out);
  }
  if (c.degree == 2) {
    Vec out(F, triple_count(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t l = j + 1; l < n; ++l) {
          uint32_t v = F->neg(eval2(c, A.bracket_basis(i, j, F), l));
          v = F->add(v, eval2(c, A.bracket_basis(i, l, F), j));
          v = F->sub(v, eval2(c, A.bracket_basis(j, l, F), i));
          out.set(triple_index(n, i, j, l), v);
        }
    return Cochain{&A, 3, out};
  }
  throw precondition_error("differential: degree must be 1 or 2");
}

Mat d1_matrix(const Algebra& A) {
  const FieldCtx* F = A.field();
  size_t n = A.dim();
  Mat d(F, pair_count(n), n);
  for (size_t m = 0; m < n; ++m) {
    Cochain f = make_cochain1(A, Vec::unit(F, n, m));
    Cochain df = differential(f);
    for (size_t r = 0; r < pair_count(n); ++r) d.set(r, m, df.comps[r]);
  }
  return d;
}

Mat d2_matrix(const Algebra& A) {
  const FieldCtx* F = A.field();
  size_t n = A.dim();
  Mat d(F, triple_count(n), pair_count(n));
  for (size_t m = 0; m < pair_count(n); ++m) {
    Cochain l = make_cochain2(A, Vec::unit(F, pair_count(n), m));
    Cochain dl = differential(l);
    for (size_t r = 0; r < triple_count(n); ++r) d.set(r, m, dl.comps[r]);
  }
  return d;
}

CohomologyReport cohomology(const Algebra& A) {
  if (A.dim() > kCohomologyDimCap)
    throw capacity_error("cohomology: dimension exceeds the dense Lambda^3 cap", kCohomologyDimCap);
  const FieldCtx* F = A.field();
  size_t n = A.dim();
  Mat d1 = d1_matrix(A);
  Mat d2 = d2_matrix(A);
  Subspace z2 = kernel(d2);
  Subspace b2 = Subspace::span_of(d1.transpose());  // rows: images of basis 1-forms
  size_t z1 = kernel(d1).dim();

  CohomologyReport rep;
  rep.z1 = z1;
  rep.z2 = z2.dim();
  rep.b2 = b2.dim();
  rep.h1 = z1;  // trivial coefficients: no coboundaries in degree 1
  rep.h2 = rep.z2 - rep.b2;

  // canonical representatives: cocycle basis reduced mod coboundaries
  std::vector<Vec> reduced;
  for (size_t i = 0; i < z2.dim(); ++i) {
    Vec r = b2.reduce(z2.basis_row(i));
    if (!r.is_zero()) reduced.push_back(r);
  }
  Subspace reps = Subspace::span_of(reduced, F, pair_count(n));
  for (size_t i = 0; i < reps.dim(); ++i) rep.h2_reps.push_back(reps.basis_row(i));
  return rep;
}

std::pair<bool, std::array<size_t, 3>> is_cocycle(const Cochain& l) {
  if (l.degree != 2) throw precondition_error("is_cocycle: degree-2 cochain expected");
  Cochain dl = differential(l);
  size_t n = l.A->dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t m = j + 1; m < n; ++m)
        if (dl.at3(i, j, m)) return {false, {i, j, m}};
  return {true, {0, 0, 0}};
}

bool class_is_nonzero(const Cochain& l) {
  if (l.degree != 2) throw precondition_error("class_is_nonzero: degree-2 cochain expected");
  return !solve(d1_matrix(*l.A), l.comps).has_value();
}

Vec vectorize(const Mat& m) {
  Vec v(m.field(), m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, m.at(i, j));
  return v;
}

Mat unvectorize(const Vec& v, size_t rows, size_t cols) {
  Mat m(v.field(), rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.set(i, j, v[i * cols + j]);
  return m;
}

Subspace derivations(const Algebra& A) {
  const FieldCtx* F = A.field();
  size_t n = A.dim();
  // unknowns: D row-major (n^2); equations: coordinates of
  // D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] for each pair i<j
  Mat sys(F, pair_count(n) * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      size_t eq0 = pair_index(n, i, j) * n;
      Vec br = A.bracket_basis(i, j, F);
      // D[b_i,b_j]: row r gets sum_m br[m] * D_{r,m}
      for (size_t r = 0; r < n; ++r)
        for (size_t m = 0; m < n; ++m)
          if (br[m]) sys.set(eq0 + r, r * n + m, F->add(sys.at(eq0 + r, r * n + m), br[m]));
      // -[D b_i, b_j]: D b_i = sum_m D_{m,i} b_m, bracket with b_j
      for (size_t m = 0; m < n; ++m) {
        Vec bm = A.bracket_basis(m, j, F);
        for (size_t r = 0; r < n; ++r)
          if (bm[r]) sys.set(eq0 + r, m * n + i, F->sub(sys.at(eq0 + r, m * n + i), bm[r]));
      }
      // -[b_i, D b_j]
      for (size_t m = 0; m < n; ++m) {
        Vec bm = A.bracket_basis(i, m, F);
        for (size_t r = 0; r < n; ++r)
          if (bm[r]) sys.set(eq0 + r, m * n + j, F->sub(sys.at(eq0 + r, m * n + j), bm[r]));
      }
    }
  return kernel(sys);
}

Subspace inner_derivations(const Algebra& A) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < A.dim(); ++i)
    rows.push_back(vectorize(A.ad(Vec::unit(A.field(), A.dim(), i))));
  return Subspace::span_of(rows, A.field(), A.dim() * A.dim());
}

size_t outer_derivation_dim(const Algebra& A) {
  return derivations(A).dim() - inner_derivations(A).dim();
}

bool matrix_is_derivation(const Algebra& A, const Mat& d) {
  return derivations(A).contains(vectorize(d));
}

}  // namespace prank
