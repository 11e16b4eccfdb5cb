#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prank/algebra.hpp"

namespace prank::catalog {

/// sl(2): basis {e, h, f}, [h,e] = 2e, [h,f] = -2f, [e,f] = h;
/// e^[p] = f^[p] = 0, h^[p] = h.
Algebra sl2(uint32_t p);

/// Standard Borel of sl(2): {t, x}, [t,x] = x; t^[p] = t, x^[p] = 0.
Algebra borel(uint32_t p);

/// One-dimensional abelian enlargement of the Borel: {t, x, y},
/// [t,x] = x, [t,y] = -y, [x,y] = 0; t^[p] = t, x^[p] = y^[p] = 0.
Algebra borel_minus(uint32_t p);

/// Heisenberg algebra with toral center: {x, y, z}, [x,y] = z central;
/// x^[p] = y^[p] = 0, z^[p] = z.
Algebra heisenberg_toral(uint32_t p);

/// Non-split central extension of borel_minus by kz with cocycle
/// lambda(x,y) = 1, lambda(t,-) = 0 and z^[p] = z.
Algebra g_lambda(uint32_t p);

/// {t, x_0, ..., x_{m-1}}: [t,x_0] = x_0, [t,x_i] = 0 for i >= 1;
/// t^[p] = t, x_i^[p] = x_{i+1}, x_{m-1}^[p] = 0.  m = 2 is the
/// rank-one solvable algebra with a single root that is not generically
/// toral.
Algebra lr1_remark(uint32_t p, size_t m);

/// p = 3, dim 5: {t1, t2, x1, x2, y} with [x1,x2] = y, [x_i,y] = t_i,
/// t_i central toral, nilpotent part cubed to zero.
Algebra p3_h();

/// p = 3, dim 6: kd + p3_h() for the grading derivation d (d = i*id on the
/// degree-i part), d^[3] = d.
Algebra p3_g();

/// Jacobson-Witt algebra W(n) over F_p: derivations of the p-truncated
/// polynomial ring in n variables, built from the defining representation;
/// brackets and p-map (operator p-th power) computed programmatically.
/// Capacity bound: n * p^n <= 64.
Algebra witt(size_t n, uint32_t p);

/// n-dimensional torus: abelian with b_i^[p] = b_i.
Algebra torus(size_t n, uint32_t p);

/// Torus semidirect nil-cyclic shape: lr1_remark(p, m) plus a central toral
/// line (plain direct product).
Algebra tn_cyclic(uint32_t p, size_t m);

/// Twisted or plain product of a torus line with sl(2); the rank-one shape
/// with a perfect quotient.
Algebra torus_times_sl2(uint32_t p, bool twisted = false);

Algebra build(const std::string& name, uint32_t p, std::optional<size_t> param);

struct Entry {
  std::string name;
  Algebra alg;
};

/// The named instances the verification suites run on at a given p.
std::vector<Entry> entries(uint32_t p);

/// Tabulated dimension data for the Cartan-type families without
/// builders; consumed only by the saturation-bound checker.
struct BoundRow {
  std::string family;  // "W", "S", "H", "K"
  uint64_t param;      // n or r
  uint64_t p;
  uint64_t dim;
  uint64_t mu;
  uint64_t rk;
  uint64_t center_dim;
  bool generically_toral;
};

/// W(n) for n in {2,3}, S(n) for n in {3,4}, H(2r) and K(2r+1) for r in
/// {1,2}, at p in {3,5,7} where the defining formulas apply:
///   dim W(n) = n p^n, mu = rk = n;
///   dim S(n) = (n-1)(p^n - 1), rk = (n-1)(p-1);
///   dim H(2r) = p^{2r} - 2, rk = p^r - 2, mu(H(2)) = 1;
///   dim K(2r+1) >= p^{2r+1} - 2, mu = r + 1, rk in {p^r, p^r - 1}.
/// Unknown mu entries use mu = rk (mu never exceeds rk).
std::vector<BoundRow> cartan_type_bound_rows();

}  // namespace prank::catalog
