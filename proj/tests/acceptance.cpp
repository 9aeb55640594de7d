// Acceptance suite: one line per criterion, each run at its stated tolerance
// (exact equality throughout) and wall-clock budget. Returns nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "liefol/catalog.hpp"
#include "liefol/cohomology.hpp"
#include "liefol/diff_form.hpp"
#include "test_support.hpp"

using namespace liefol;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string claim_value(const CatalogRun& run, const std::string& name) {
  for (const auto& c : run.claims)
    if (c.name == name) return c.computed;
  return "<missing claim " + name + ">";
}

// ---------------------------------------------------------------- criteria

Outcome criterion1_familia1() {
  Outcome out;
  CatalogParams p;
  p.n = 5;
  p.t = Rational(1);
  const auto run = run_familia1(p);
  out.require(claim_value(run, "dim_Z1") == "32", "dim Z1 != 32");
  out.require(claim_value(run, "dim_B1") == "28", "dim B1 != 28");
  out.require(run.paper_claims_pass(), "a paper claim failed");
  out.detail = "Z1 = " + claim_value(run, "dim_Z1") + ", B1 = " + claim_value(run, "dim_B1") +
               ", L = sl_6";
  return out;
}

Outcome criterion2_quadric() {
  Outcome out;
  CatalogParams p;
  p.samples = 25;
  const auto run = run_aff_so5(p);
  out.require(claim_value(run, "dim_Z1") == "8", "dim Z1 != 8");
  out.require(claim_value(run, "dim_B1") == "8", "dim B1 != 8");
  out.require(claim_value(run, "rigid") == "true", "not rigid");
  out.require(claim_value(run, "orbit_dim_on_quadric") == "2", "orbit dim != 2");
  out.require(claim_value(run, "points_on_quadric") == "true", "sample left the quadric");
  out.detail = "Z1 = B1 = 8, orbit dim 2 at 25 quadric points";
  return out;
}

Outcome criterion3_whitehead() {
  Outcome out;
  std::mt19937_64 rng(12345);
  const auto sym = sl2_sym_power(4);
  std::vector<std::pair<std::string, LieAlgebra>> ambients;
  ambients.emplace_back("sl2", sl_matrices(2).algebra);
  ambients.emplace_back("sl3", sl_matrices(3).algebra);
  ambients.emplace_back("so5",
                        so_from_form(invariant_symmetric_form({sym.h, sym.e, sym.f})).algebra);
  std::size_t semisimple_cases = 0;
  for (const auto& [name, L] : ambients) {
    out.require(is_semisimple(L), name + " not semisimple");
    const auto adj = cohomology_dims(adjoint_module(L), 1);
    out.require(adj.h == 0, "H1(" + name + ", adjoint) != 0");
    ++semisimple_cases;
    for (int rep = 0; rep < 5; ++rep) {
      const auto g = testsupport::random_closed_subalgebra(L, rng, 1 + rep % 2);
      const GModule M = quotient_module(g);
      if (M.dim == 0 || !is_semisimple(M.acting)) continue;
      ++semisimple_cases;
      out.require(cohomology_dims(M, 1).h == 0,
                  "H1 != 0 for a semisimple subalgebra of " + name);
    }
  }
  // a fixed non-vacuous instance: sl2 as the top-left block of sl3
  {
    const auto sl3 = sl_matrices(3);
    QMatrix h(3, 3), e(3, 3), f(3, 3);
    h(0, 0) = 1;
    h(1, 1) = -1;
    e(0, 1) = 1;
    f(1, 0) = 1;
    QMatrix flat(8, 9);
    for (std::size_t i = 0; i < 8; ++i) flat.set_row(i, flatten(sl3.basis[i]));
    const RowSpan<Rational> span(flat);
    QMatrix rows(3, 8);
    rows.set_row(0, span.reduce(flatten(h)).coords);
    rows.set_row(1, span.reduce(flatten(e)).coords);
    rows.set_row(2, span.reduce(flatten(f)).coords);
    const GModule M = quotient_module({sl3.algebra, rows});
    out.require(is_semisimple(M.acting), "block sl2 not recognized as semisimple");
    out.require(cohomology_dims(M, 1).h == 0, "H1(sl2, sl3/sl2) != 0");
    ++semisimple_cases;
  }
  out.require(semisimple_cases >= 4, "too few semisimple instances exercised");
  out.detail = std::to_string(semisimple_cases) + " semisimple acting algebras, H1 = 0 for all";
  return out;
}

Outcome criterion4_adjoint_kernel() {
  Outcome out;
  std::size_t points = 0;
  for (std::size_t n : {2, 3, 4}) {
    SeededRng rng(n);
    std::size_t found = 0, draws = 0;
    while (found < 10 && draws < 400) {
      ++draws;
      QVector v(n * n - 1);
      for (auto& x : v) x = Rational(rng.int_in(-10000, 10000));
      if (is_zero_vec(v)) continue;
      const auto rep = adjoint_kernel_sections(n, ProjPoint{v});
      if (rep.nilpotent || !rep.regular) continue;
      ++found;
      ++points;
      out.require(rep.kernel_dim == n - 1,
                  "kernel dim != n-1 for n = " + std::to_string(n));
      out.require(rep.sections_commute, "sections fail to commute with p");
      out.require(rep.sections_independent, "sections dependent");
    }
    out.require(found == 10, "could not find 10 regular points for n = " + std::to_string(n));
  }
  out.detail = std::to_string(points) + " regular points across n = 2, 3, 4";
  return out;
}

Outcome criterion5_orbit_dim() {
  Outcome out;
  const auto orbit = generic_orbit_dim(sym4_fields(), random_proj_points(4, 25, 0));
  out.require(orbit.dim == 3, "generic orbit dim != 3");
  for (const auto& s : orbit.log)
    out.require(s.rank == 3, "rank != 3 at " + s.point.str());
  out.detail = "tangent rank 3 at all 25 seeded points";
  return out;
}

Outcome criterion6_exceptional_form() {
  Outcome out;
  const auto fields = exceptional_fields();
  const auto form = defining_one_form(fields);
  const auto deg = form.omega.coefficient_degree();
  out.require(deg.has_value() && *deg == 3, "coefficient degree != 3");
  out.require(form.omega.interior(euler_field(3)).is_zero(), "i_E omega != 0");
  for (const auto& f : fields)
    out.require(form.omega.interior(f).is_zero(), "omega(X_i) != 0");
  out.require(frobenius_check(form.omega).integrable, "omega ^ d omega != 0");
  out.detail = "degree-3 coefficients, i_E omega = 0, omega(X_i) = 0, omega ^ d omega = 0";
  return out;
}

Outcome criterion7_family_closure() {
  Outcome out;
  const auto fields = familia1_fields(5);
  const auto fam = family_closure_check(fields);
  out.require(fam.closed, "family not closed over Q(t)");
  if (fam.closed) {
    const RatFunc t = RatFunc::t();
    // the expected table, in the [X2, X1] orientation of the bracket convention
    out.require(fam.table[1][0][1] == RatFunc(1) && fam.table[1][0][0].is_zero() &&
                    fam.table[1][0][2].is_zero(),
                "[X2, X1] != X2");
    out.require(fam.table[2][0][0].is_zero() && fam.table[2][0][1] == t &&
                    fam.table[2][0][2] == RatFunc(1),
                "[X3, X1] != t X2 + X3");
    for (std::size_t k = 0; k < 3; ++k)
      out.require(fam.table[1][2][k].is_zero(), "[X2, X3] != 0");
    for (long t0 : {0L, 1L, 2L}) {
      const auto fiber = family_closure_check(specialize_family(fields, Rational(t0)));
      out.require(fiber.closed, "fiber at t = " + std::to_string(t0) + " not closed");
      if (!fiber.closed) continue;
      const auto specialized = specialize_table(fam.table, Rational(t0));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t k = 0; k < 3; ++k)
            out.require(*fiber.table[i][j][k].eval(Rational(0)) == specialized[i][j][k],
                        "specialization does not commute at t = " + std::to_string(t0));
    }
  }
  out.detail = "table reproduced; specialization commutes at t = 0, 1, 2";
  return out;
}

Outcome criterion8_property_suites() {
  Outcome out;
  std::mt19937_64 rng(777);

  // delta . delta = 0 and B1 = dim M - dim M^g on every constructed complex
  std::vector<GModule> modules;
  {
    const auto sl2 = LieAlgebra::sl2();
    QMatrix aff(2, 3);
    aff(0, 0) = 1;
    aff(1, 1) = 1;
    modules.push_back(quotient_module({sl2, aff}));
    modules.push_back(adjoint_module(sl2));
    const auto sym = sl2_sym_power(4);
    modules.push_back(quotient_module(sym.embedding));
    const auto so5 = so_from_form(invariant_symmetric_form({sym.h, sym.e, sym.f}));
    QMatrix flat(10, 25);
    for (std::size_t i = 0; i < 10; ++i) flat.set_row(i, flatten(so5.basis[i]));
    const RowSpan<Rational> span(flat);
    QMatrix g(2, 10);
    g.set_row(0, span.reduce(flatten(sym.h)).coords);
    g.set_row(1, span.reduce(flatten(sym.e)).coords);
    modules.push_back(quotient_module({so5.algebra, g}));
    const auto L6 = projective_ambient(5);
    const auto rows = field_rows_mod_euler(L6, specialize_family(familia1_fields(5), Rational(1)));
    modules.push_back(quotient_module({L6.algebra, rows}));
    const auto sl3 = sl_matrices(3).algebra;
    for (int rep = 0; rep < 3; ++rep)
      modules.push_back(quotient_module(testsupport::random_closed_subalgebra(sl3, rng, 1 + rep % 2)));
  }
  for (const auto& M : modules) {
    if (M.acting.dim() == 0) continue;
    const auto complex = build_ce_complex(M, 3);  // throws if delta.delta != 0
    for (std::size_t k = 0; k + 1 < complex.differentials.size(); ++k)
      out.require((complex.differentials[k + 1] * complex.differentials[k]).is_zero(),
                  "delta^" + std::to_string(k + 1) + " . delta^" + std::to_string(k) + " != 0");
    if (M.dim > 0)
      out.require(rank(complex.differentials[0]) == M.dim - invariant_dimension(M),
                  "B1 != dim M - dim invariants");
  }

  // Jacobi on 50 randomized field triples
  for (int rep = 0; rep < 50; ++rep) {
    const auto X = testsupport::rand_field(rng, 2, 1 + rep % 2);
    const auto Y = testsupport::rand_field(rng, 2, 1);
    const auto Z = testsupport::rand_field(rng, 2, 1 + (rep / 2) % 2);
    const auto jac = bracket_vf(X, bracket_vf(Y, Z)) + bracket_vf(Y, bracket_vf(Z, X)) +
                     bracket_vf(Z, bracket_vf(X, Y));
    out.require(jac.is_zero(), "Jacobi failed on a random field triple");
  }

  // basis-change and conjugation invariance of the rigidity verdict
  {
    const auto L6 = projective_ambient(5);
    const auto rows = field_rows_mod_euler(L6, specialize_family(familia1_fields(5), Rational(1)));
    const auto base = rigidity_verdict({L6.algebra, rows});
    QMatrix mix(3, 3);
    do {
      mix = testsupport::rand_matrix(rng, 3, 3);
    } while (determinant(mix) == 0);
    const auto mixed = rigidity_verdict({L6.algebra, mix * rows});
    out.require(mixed.dim_Z1 == base.dim_Z1 && mixed.dim_B1 == base.dim_B1,
                "verdict changed under a basis mix");
    QVector x(L6.algebra.dim(), Rational(0));
    x[0] = 1;  // an off-diagonal elementary field, ad-nilpotent
    const QMatrix phi = exp_ad_nilpotent(L6.algebra, x);
    const auto conj = rigidity_verdict({L6.algebra, rows * phi.transpose()});
    out.require(conj.dim_Z1 == base.dim_Z1 && conj.dim_B1 == base.dim_B1,
                "verdict changed under inner conjugation");
  }

  // rank-nullity on 100 random matrices
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    const QMatrix m = testsupport::rand_matrix(rng, rows, cols);
    const auto ker = kernel_basis(m);
    out.require(rank(m) + ker.size() == cols, "rank-nullity failed");
    for (const auto& v : ker)
      out.require(is_zero_vec(m.mul_vec(v)), "kernel vector not annihilated");
  }

  out.detail = std::to_string(modules.size()) +
               " complexes audited; 50 Jacobi triples; invariance on familia1; 100 matrices";
  return out;
}

Outcome catalog_audit() {
  Outcome out;
  CatalogParams p;
  for (const auto& name : catalog_names()) {
    const auto run = run_catalog_entry(name, p);
    out.require(run.all_checked_pass(), "claims failed in " + name);
    out.require(run.paper_claims_pass(), "paper claims failed in " + name);
  }
  out.detail = "all tagged claims pass across the six entries";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"criterion 1: familia1 rigidity numbers (Z1 = 32, B1 = 28)", 5.0, criterion1_familia1},
      {"criterion 2: aff(C) on the quadric (Z1 = B1 = 8, orbit dim 2)", 5.0, criterion2_quadric},
      {"criterion 3: Whitehead vanishing suite", 30.0, criterion3_whitehead},
      {"criterion 4: adjoint sl_n pointwise kernel (dim n-1)", 20.0, criterion4_adjoint_kernel},
      {"criterion 5: sl2-Sym^4 orbit dimension 3 at 25 points", 5.0, criterion5_orbit_dim},
      {"criterion 6: exceptional form identities on P^3", 10.0, criterion6_exceptional_form},
      {"criterion 7: familia1 closure over Q(t) and specialization", 5.0,
       criterion7_family_closure},
      {"criterion 8: property suites (complexes, Jacobi, invariance, rank-nullity)", 60.0,
       criterion8_property_suites},
      {"catalog audit: every tagged claim of every entry", 60.0, catalog_audit},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      out.ok = false;
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] %s  (%.2f s < %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.name, secs,
                c.limit_s, out.detail.empty() ? "" : " -- ", out.detail.c_str());
    if (!out.ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
