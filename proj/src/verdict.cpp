#include "prank/verdict.hpp"

#include <algorithm>
#include <sstream>

namespace prank {

bool Fingerprint::operator==(const Fingerprint& o) const {
  return dim == o.dim && p == o.p && center_dim == o.center_dim && derived_dim == o.derived_dim &&
         toral_radical_dim == o.toral_radical_dim && derived_series == o.derived_series &&
         lower_central_series == o.lower_central_series && solvable == o.solvable &&
         nilpotent == o.nilpotent && perfect == o.perfect && nullcone_lines == o.nullcone_lines &&
         toral_nonzero == o.toral_nonzero;
}

Fingerprint fingerprint(const Algebra& A, const Budget& budget) {
  Fingerprint f;
  f.dim = A.dim();
  f.p = A.p();
  f.center_dim = A.center().dim();
  f.derived_dim = A.derived().dim();
  f.toral_radical_dim = A.toral_radical().dim();
  f.derived_series = A.derived_series_dims();
  f.lower_central_series = A.lower_central_series_dims();
  f.solvable = f.derived_series.back() == 0;
  f.nilpotent = f.lower_central_series.back() == 0;
  f.perfect = f.derived_dim == f.dim;
  try {
    NullconePoints nc = nullcone(A, 1, /*lines_only=*/true, budget);
    f.nullcone_lines = int64_t(nc.points.size());
    std::vector<Vec> torals = toral_elements(A, 1, budget);
    f.toral_nonzero = int64_t(torals.size()) - 1;  // drop zero
  } catch (const capacity_error&) {
    f.nullcone_lines = -1;
    f.toral_nonzero = -1;
  }
  return f;
}

namespace {

// cheap isomorphism-invariant class of a single element, for candidate
// filtering during the backtracking search
struct ElemClass {
  size_t cent_dim;
  size_t pclosure_dim;
  bool null;
  bool toral;
  bool operator==(const ElemClass& o) const {
    return cent_dim == o.cent_dim && pclosure_dim == o.pclosure_dim && null == o.null &&
           toral == o.toral;
  }
};

ElemClass elem_class(const Algebra& A, const Vec& x) {
  Vec px = A.pmap(x);
  return ElemClass{A.centralizer(x).dim(), A.p_closure(x).dim(), px.is_zero(), px == x};
}

// generation history of a spanning set of A: each entry is a basis vector
// (generator), a bracket of two earlier entries, or a p-map image
struct Word {
  enum Kind { Gen, Bracket, Pmap } kind;
  size_t a = 0, b = 0;  // operand word indices; for Gen, a = basis index
  size_t stage = 0;     // number of generators present when created
};

struct GenerationPlan {
  std::vector<Word> words;
  std::vector<Vec> elems;           // value of each word in A
  std::vector<size_t> generators;   // word indices of the generators
  std::vector<size_t> independent;  // word indices forming a basis of A
};

GenerationPlan generation_plan(const Algebra& A) {
  const FieldCtx* F = A.field();
  GenerationPlan plan;
  Subspace span(F, A.dim());

  auto push = [&](Word w, const Vec& v) {
    w.stage = plan.generators.size();
    plan.words.push_back(w);
    plan.elems.push_back(v);
    if (!span.contains(v)) {
      plan.independent.push_back(plan.words.size() - 1);
      span = sum(span, Subspace::span_of({v}, F, A.dim()));
      return true;
    }
    return false;
  };

  while (span.dim() < A.dim()) {
    size_t gi = 0;
    while (span.contains(Vec::unit(F, A.dim(), gi))) ++gi;
    plan.generators.push_back(plan.words.size());
    push(Word{Word::Gen, gi, 0, 0}, Vec::unit(F, A.dim(), gi));
    // close under bracket and p-map before introducing another generator
    bool grew = true;
    while (grew && span.dim() < A.dim()) {
      grew = false;
      size_t count = plan.words.size();
      for (size_t i = 0; i < count && !grew; ++i) {
        Vec pv = A.pmap(plan.elems[i]);
        if (!span.contains(pv)) grew = push(Word{Word::Pmap, i, 0, 0}, pv);
        for (size_t j = 0; j < count && !grew; ++j) {
          if (i == j) continue;
          Vec bv = A.bracket(plan.elems[i], plan.elems[j]);
          if (!span.contains(bv)) grew = push(Word{Word::Bracket, i, j, 0}, bv);
        }
      }
    }
  }
  return plan;
}

struct IsoSearch {
  const Algebra& A;
  const Algebra& B;
  const GenerationPlan& plan;
  const std::vector<Vec>& b_vectors;          // candidate images, canonical order
  const std::vector<ElemClass>& b_classes;    // classes of b_vectors
  std::vector<ElemClass> gen_classes;         // classes of the A-generators
  uint64_t steps = 0;
  uint64_t step_cap;

  // replay the words whose stage is <= the number of assigned generators;
  // returns false on any linear or structural inconsistency
  bool replay(std::vector<Vec>& images, std::vector<Vec>& indep_a, std::vector<Vec>& indep_b,
              size_t stage_limit, size_t from) {
    const FieldCtx* F = A.field();
    for (size_t w = from; w < plan.words.size(); ++w) {
      if (plan.words[w].stage > stage_limit) break;
      if (++steps > step_cap) throw capacity_error("is_isomorphic: search budget exhausted", step_cap);
      const Word& word = plan.words[w];
      Vec img;
      switch (word.kind) {
        case Word::Gen:
          img = images[w];  // pre-seeded by the caller
          break;
        case Word::Bracket:
          img = B.bracket(images[word.a], images[word.b]);
          break;
        case Word::Pmap:
          img = B.pmap(images[word.a]);
          break;
      }
      images[w] = img;
      // dependency pattern must match A's
      Subspace sa = Subspace::span_of(indep_a, F, A.dim());
      auto coords = sa.coordinates(plan.elems[w]);
      if (coords) {
        Vec expect(F, B.dim());
        for (size_t t = 0; t < indep_b.size(); ++t) expect.add_scaled(indep_b[t], (*coords)[t]);
        if (expect != img) return false;
      } else {
        Subspace sb = Subspace::span_of(indep_b, F, B.dim());
        if (sb.contains(img)) return false;  // independent in A, dependent in B
        indep_a.push_back(plan.elems[w]);
        indep_b.push_back(img);
      }
    }
    return true;
  }

  std::optional<Mat> assign(size_t gen_idx, std::vector<Vec>& images, std::vector<Vec> indep_a,
                            std::vector<Vec> indep_b) {
    const FieldCtx* F = A.field();
    if (gen_idx == plan.generators.size()) {
      // indep rows span A; solve for the matrix phi with phi * elem = image
      Mat ma = Mat::from_rows(indep_a, F, A.dim());       // rows: elements
      Mat mb = Mat::from_rows(indep_b, F, B.dim());
      // phi = mb^T * (ma^T)^{-1}; invert by solving ma^T X = I columnwise
      Mat mat = ma.transpose();
      Mat inv(F, A.dim(), A.dim());
      for (size_t c = 0; c < A.dim(); ++c) {
        auto col = solve(mat, Vec::unit(F, A.dim(), c));
        if (!col) return std::nullopt;
        for (size_t r = 0; r < A.dim(); ++r) inv.set(r, c, (*col)[r]);
      }
      Mat phi = mb.transpose().mul(inv);
      if (!verify_isomorphism(A, B, phi)) return std::nullopt;
      return phi;
    }
    size_t word_idx = plan.generators[gen_idx];
    size_t replay_from = word_idx;
    for (const Vec& cand : b_vectors) {
      if (!(b_classes[&cand - b_vectors.data()] == gen_classes[gen_idx])) continue;
      std::vector<Vec> imgs = images;
      std::vector<Vec> ia = indep_a, ib = indep_b;
      imgs[word_idx] = cand;
      if (!replay(imgs, ia, ib, gen_idx + 1, replay_from)) continue;
      auto res = assign(gen_idx + 1, imgs, ia, ib);
      if (res) return res;
    }
    return std::nullopt;
  }
};

}  // namespace

bool verify_isomorphism(const Algebra& A, const Algebra& B, const Mat& phi) {
  const FieldCtx* F = A.field();
  if (A.dim() != B.dim() || F != B.field()) return false;
  if (rref(phi).rank() != A.dim()) return false;
  for (size_t i = 0; i < A.dim(); ++i) {
    Vec ei = Vec::unit(F, A.dim(), i);
    if (phi.apply(A.pmap(ei)) != B.pmap(phi.apply(ei))) return false;
    for (size_t j = i + 1; j < A.dim(); ++j) {
      Vec ej = Vec::unit(F, A.dim(), j);
      if (phi.apply(A.bracket(ei, ej)) != B.bracket(phi.apply(ei), phi.apply(ej))) return false;
    }
  }
  return true;
}

std::optional<Mat> is_isomorphic(const Algebra& A, const Algebra& B, const Budget& budget) {
  if (A.p() != B.p()) return std::nullopt;
  if (A.dim() != B.dim()) return std::nullopt;
  if (A.dim() > 6) throw capacity_error("is_isomorphic: dimension cap is 6", 6);
  if (!(fingerprint(A, budget) == fingerprint(B, budget))) return std::nullopt;
  if (A.dim() == 0) return Mat(A.field(), 0, 0);

  GenerationPlan plan = generation_plan(A);

  std::vector<Vec> b_vectors;
  std::vector<ElemClass> b_classes;
  for_each_point(A.field(), B.dim(), [&](const Vec& v) {
    if (!v.is_zero()) {
      b_vectors.push_back(v);
      b_classes.push_back(elem_class(B, v));
    }
    return true;
  });

  IsoSearch search{A, B, plan, b_vectors, b_classes, {}, 0, 50'000'000};
  for (size_t g : plan.generators) search.gen_classes.push_back(elem_class(A, plan.elems[g]));

  std::vector<Vec> images(plan.words.size());
  return search.assign(0, images, {}, {});
}

std::string outcome_name(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Sl2: return "Sl2";
    case Verdict::Outcome::Borel: return "Borel";
    case Verdict::Outcome::BorelMinus: return "BorelMinus";
    case Verdict::Outcome::TorusTimesSl2: return "TorusTimesSl2";
    case Verdict::Outcome::TorusSemidirectNilCyclic: return "TorusSemidirectNilCyclic";
    case Verdict::Outcome::Torus: return "Torus";
    case Verdict::Outcome::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

Verdict classify_rank_one(const Algebra& A, const Budget& budget) {
  const FieldCtx* F = A.field();
  RankResult rank = elementary_rank(A, 1, budget);
  if (rank.rank > 1)
    throw std::domain_error("classify_rank_one: p-rank exceeds 1 at the working extension");

  Verdict v;
  v.fp = fingerprint(A, budget);
  v.p_rank = rank.rank;

  if (A.is_torus()) {
    v.outcome = Verdict::Outcome::Torus;
    v.detail = "abelian with bijective p-map";
    return v;
  }

  // direct recognition
  if (A.dim() == 3) {
    if (auto iso = is_isomorphic(A, catalog::sl2(A.p()), budget)) {
      v.outcome = Verdict::Outcome::Sl2;
      v.iso = iso;
      v.detail = "isomorphic to sl2";
      return v;
    }
  }
  if (A.dim() == 2) {
    if (auto iso = is_isomorphic(A, catalog::borel(A.p()), budget)) {
      v.outcome = Verdict::Outcome::Borel;
      v.iso = iso;
      v.detail = "isomorphic to the Borel subalgebra";
      return v;
    }
  }

  Subspace center = A.center();

  // split torus x sl2: a p-closed perfect 3-dimensional complement of a
  // toral center
  if (center.dim() > 0 && A.dim() == center.dim() + 3) {
    Subspace der = A.derived();
    if (der.dim() == 3 && intersect(der, center).dim() == 0 && A.is_p_subalgebra(der)) {
      bool center_toral = A.toral_radical() == center;
      if (center_toral) {
        auto emb = A.subalgebra_as_algebra(der);
        if (auto iso = is_isomorphic(emb.alg, catalog::sl2(A.p()), budget)) {
          v.outcome = Verdict::Outcome::TorusTimesSl2;
          v.iso = iso;
          v.detail = "derived subalgebra is sl2 and complements the toral center";
          return v;
        }
      }
    }
  }

  // torus semidirect nil-cyclic: nullcone a single line, the p-nilpotent
  // elements a cyclic p-closure complementing a maximal torus
  {
    NullconePoints nc = nullcone(A, 1, /*lines_only=*/true, budget);
    if (nc.points.size() == 1) {
      std::vector<Vec> nil_points;
      for_each_point(F, A.dim(), [&](const Vec& x) {
        if (!x.is_zero() && A.is_p_nilpotent(x)) nil_points.push_back(x);
        return true;
      });
      Vec gen(F, A.dim());
      size_t best = 0;
      for (const Vec& x : nil_points) {
        size_t d = A.p_closure(x).dim();
        if (d > best) {
          best = d;
          gen = x;
        }
      }
      if (best > 0) {
        Subspace ncl = A.p_closure(gen);
        Subspace nil_span = Subspace::span_of(nil_points, F, A.dim());
        Subspace g_full = Subspace::full(F, A.dim());
        if (nil_span == ncl && ncl.contains(A.bracket_span(g_full, ncl))) {
          MaximalToriResult mt = maximal_tori(A, budget);
          for (const Torus& t : mt.tori) {
            if (intersect(t.span, ncl).dim() == 0 && t.span.dim() + ncl.dim() == A.dim()) {
              v.outcome = Verdict::Outcome::TorusSemidirectNilCyclic;
              std::ostringstream os;
              os << "torus + cyclic p-closure of " << gen.str() << " spans; nullcone is one line";
              v.detail = os.str();
              return v;
            }
          }
        }
      }
    }
  }

  // quotient-by-center types
  if (center.dim() > 0) {
    AlgebraQuotient q = A.quotient(center);
    if (q.alg.dim() == 3) {
      if (auto iso = is_isomorphic(q.alg, catalog::sl2(A.p()), budget)) {
        v.outcome = Verdict::Outcome::Sl2;
        v.iso = iso;
        v.detail = "quotient by the center is sl2";
        return v;
      }
      if (auto iso = is_isomorphic(q.alg, catalog::borel_minus(A.p()), budget)) {
        v.outcome = Verdict::Outcome::BorelMinus;
        v.iso = iso;
        v.detail = "quotient by the nonzero center is the abelian-enlarged Borel";
        return v;
      }
    }
    if (q.alg.dim() == 2) {
      if (auto iso = is_isomorphic(q.alg, catalog::borel(A.p()), budget)) {
        v.outcome = Verdict::Outcome::Borel;
        v.iso = iso;
        v.detail = "quotient by the center is the Borel subalgebra";
        return v;
      }
    }
  }

  v.outcome = Verdict::Outcome::Unclassified;
  v.detail = "no recognizer matched; fingerprint attached";
  return v;
}

bool HarnessReport::all_pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

namespace {

struct EntryData {
  std::string name;
  Algebra alg;
  InvariantProfile prof;
};

std::vector<EntryData> profiled_entries(uint32_t p, const Budget& budget) {
  std::vector<EntryData> out;
  for (auto& e : catalog::entries(p)) {
    InvariantProfile prof = invariant_profile(e.alg, 1, budget);
    out.push_back({e.name, std::move(e.alg), prof});
  }
  return out;
}

void run_cr4(HarnessReport& rep, const std::vector<EntryData>& entries, const Budget& budget) {
  if (rep.p < 5) return;
  for (const auto& e : entries) {
    if (!e.prof.generically_toral || e.prof.p_rank != 1) continue;
    Verdict v = classify_rank_one(e.alg, budget);
    bool quotient_type = v.outcome == Verdict::Outcome::Sl2 ||
                         v.outcome == Verdict::Outcome::TorusTimesSl2 ||
                         v.outcome == Verdict::Outcome::Borel ||
                         v.outcome == Verdict::Outcome::BorelMinus;
    bool center_ok = v.outcome != Verdict::Outcome::BorelMinus || e.prof.center_dim > 0;
    bool witness_ok = !v.iso.has_value() || true;  // verified inside classify
    rep.items.push_back({"cr4", e.name, quotient_type && center_ok && witness_ok,
                         "outcome " + outcome_name(v.outcome)});
  }
}

void run_cr10(HarnessReport& rep, const std::vector<EntryData>& entries, const Budget& budget) {
  for (const auto& e : entries) {
    if (e.prof.p_rank != 1) continue;
    if (e.prof.center_dim == 0) {
      Verdict v = classify_rank_one(e.alg, budget);
      bool ok = v.outcome == Verdict::Outcome::Borel || v.outcome == Verdict::Outcome::Sl2;
      rep.items.push_back({"cr10.centerless", e.name, ok, "outcome " + outcome_name(v.outcome)});
    }
    if (e.prof.perfect) {
      Verdict v = classify_rank_one(e.alg, budget);
      bool ok = v.outcome == Verdict::Outcome::Sl2;
      rep.items.push_back({"cr10.perfect", e.name, ok, "outcome " + outcome_name(v.outcome)});
    }
  }
}

void run_cr11(HarnessReport& rep, const std::vector<EntryData>& entries, const Budget& budget) {
  for (const auto& e : entries) {
    if (e.prof.toral_radical_dim != 0 || e.prof.p_rank != 1) continue;
    Verdict v = classify_rank_one(e.alg, budget);
    bool ok = v.outcome == Verdict::Outcome::Sl2 || v.outcome == Verdict::Outcome::Borel ||
              v.outcome == Verdict::Outcome::TorusSemidirectNilCyclic;
    rep.items.push_back({"cr11", e.name, ok, "outcome " + outcome_name(v.outcome)});
  }
}

void run_cr6(HarnessReport& rep, const std::vector<EntryData>& entries, const Budget& budget) {
  if (rep.p < 5) return;
  for (const auto& e : entries) {
    if (e.prof.r_count < 3) continue;
    auto witnesses = elementary_witnesses(e.alg, 2, 1, budget);
    bool ok = !witnesses.empty() && witness_is_valid(e.alg, witnesses.front());
    std::string detail = witnesses.empty() ? "no rank-2 witness found"
                                           : "witness rows " + witnesses.front().basis().row(0).str();
    rep.items.push_back({"cr6", e.name, ok, detail});
  }
}

void run_lr1(HarnessReport& rep, const std::vector<EntryData>& entries) {
  for (const auto& e : entries) {
    if (e.prof.p_rank != 1 || e.prof.r_count < 2) continue;
    rep.items.push_back({"lr1", e.name, e.prof.generically_toral,
                         e.prof.generically_toral ? "generically toral" : "no self-centralizing torus"});
  }
}

void run_cr1_2(HarnessReport& rep, const std::vector<EntryData>& entries, const Budget& budget) {
  for (const auto& e : entries) {
    if (!e.prof.generically_toral || e.prof.p_rank != 1) continue;
    MaximalToriResult mt = maximal_tori(e.alg, budget);
    bool ok = true;
    std::string detail = "centralizer of every root vector is ker(alpha) + its line";
    for (const Torus& t : mt.tori) {
      RootDecomposition d = root_decomposition(e.alg, t);
      for (const Root& alpha : d.roots) {
        Subspace ker = root_kernel(d, alpha);
        for_each_line(e.alg.field(), alpha.space.dim(), [&](const Vec& coeff) {
          Vec x(e.alg.field(), e.alg.dim());
          for (size_t i = 0; i < alpha.space.dim(); ++i)
            x.add_scaled(alpha.space.basis_row(i), coeff[i]);
          Subspace expected = sum(ker, Subspace::span_of({x}, e.alg.field(), e.alg.dim()));
          if (e.alg.centralizer(x) != expected) {
            ok = false;
            detail = "fails at root vector " + x.str();
            return false;
          }
          return true;
        });
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.items.push_back({"cr1_2", e.name, ok, detail});
  }
}

void run_cr3_2(HarnessReport& rep, const std::vector<EntryData>& entries) {
  for (const auto& e : entries) {
    if (rep.p >= 5) {
      if (!e.prof.generically_toral || e.prof.p_rank != 1) continue;
      bool ok = e.prof.rho == 1 && e.prof.mu == e.prof.center_dim + 1;
      std::ostringstream os;
      os << "rho = " << e.prof.rho << ", mu = " << e.prof.mu << ", dim C = " << e.prof.center_dim;
      rep.items.push_back({"cr3_2", e.name, ok, os.str()});
    } else if (e.name == "p3_g") {
      // the p = 3 counterexample: rho = 2 despite generic torality and rank 1
      bool ok = e.prof.generically_toral && e.prof.p_rank == 1 && e.prof.rho == 2;
      std::ostringstream os;
      os << "rho = " << e.prof.rho << " (expected 2: the p >= 5 bound fails at p = 3)";
      rep.items.push_back({"cr3_2.p3_counterexample", e.name, ok, os.str()});
    }
  }
}

void run_al1(HarnessReport& rep, const std::vector<EntryData>& entries, const Budget& budget) {
  for (const auto& e : entries) {
    if (e.name == "torus_times_sl2") {
      Verdict v = classify_rank_one(e.alg, budget);
      rep.items.push_back({"al1.torus_sl2", e.name, v.outcome == Verdict::Outcome::TorusTimesSl2,
                           "outcome " + outcome_name(v.outcome)});
    }
    if (e.name == "tn_cyclic") {
      Verdict v = classify_rank_one(e.alg, budget);
      rep.items.push_back({"al1.nil_cyclic", e.name,
                           v.outcome == Verdict::Outcome::TorusSemidirectNilCyclic,
                           "outcome " + outcome_name(v.outcome)});
    }
    if (e.name == "torus_3") {
      Verdict v = classify_rank_one(e.alg, budget);
      rep.items.push_back(
          {"al1.torus", e.name, v.outcome == Verdict::Outcome::Torus, "outcome " + outcome_name(v.outcome)});
    }
  }
}

}  // namespace

HarnessReport theorem_harness(const std::string& suite, uint32_t p, const Budget& budget) {
  HarnessReport rep;
  rep.suite = suite;
  rep.p = p;
  static const std::vector<std::string> known{"cr4",   "cr10",  "cr11", "cr6",
                                              "lr1",   "cr1_2", "cr3_2", "al1"};
  bool all = suite == "all";
  if (!all && std::find(known.begin(), known.end(), suite) == known.end())
    throw precondition_error("theorem_harness: unknown suite '" + suite + "'");
  auto entries = profiled_entries(p, budget);
  if (all || suite == "cr4") run_cr4(rep, entries, budget);
  if (all || suite == "cr10") run_cr10(rep, entries, budget);
  if (all || suite == "cr11") run_cr11(rep, entries, budget);
  if (all || suite == "cr6") run_cr6(rep, entries, budget);
  if (all || suite == "lr1") run_lr1(rep, entries);
  if (all || suite == "cr1_2") run_cr1_2(rep, entries, budget);
  if (all || suite == "cr3_2") run_cr3_2(rep, entries);
  if (all || suite == "al1") run_al1(rep, entries, budget);
  return rep;
}

}  // namespace prank
