#pragma once

// Seeded verification campaigns.  Each check returns a CheckResult with the
// first counterexample found; suites bundle them into a Report.

#include <cstdint>
#include <string>
#include <vector>

#include "gsp4/qexp.hpp"
#include "gsp4/report.hpp"

namespace gsp4 {

// --- operators -------------------------------------------------------------

/// Z2 F = U(Z F) on random expansions of box p^2 * compare_at.
CheckResult check_z2_equals_uz(std::int64_t p, Weight w, int trials, std::uint64_t seed,
                               std::int64_t compare_at = 8);
/// Z2(X2 F) = 0 mod p on the same kind of corpus.
CheckResult check_z2x2_zero(std::int64_t p, Weight w, int trials, std::uint64_t seed,
                            std::int64_t compare_at = 8);
/// Symbolic: Q2 in weight (j, 2) has nonnegative valuations and reduces mod p
/// to Z2 + X2 (j = 2) or Z2 (j >= 3).
CheckResult check_q2_formal(std::int64_t p, int j);
/// Numeric: Q2 F = (Z2 [+ X2]) F mod p on random expansions.
CheckResult check_q2_numeric(std::int64_t p, int j, int trials, std::uint64_t seed,
                             std::int64_t compare_at = 8);
/// U(V f) = f on random one-variable expansions.
CheckResult check_elliptic_uv(std::int64_t p, int trials, std::uint64_t seed);

// --- binary quadratic forms ------------------------------------------------

/// For every reduced positive definite form with |D| <= max_disc: |F(Q)| is
/// 2, 1, 0 by the Legendre symbol of D (p + 1 when p | Q), and every
/// neighbour class of Q has [Q] among its own neighbours.
CheckResult check_neighbor_laws(std::int64_t p, std::int64_t max_disc);
/// orbit_cycle on `count` p-primitive forms with (D/p) = +1: A Q A^T = p^s Q,
/// det A = p^s (same for B), and s <= number of reduced forms of D.
CheckResult check_orbit_cycles(std::int64_t p, int count, std::uint64_t seed);

// --- contraction -----------------------------------------------------------

/// con(Q (x) Q^vee) = r^2 - 4mn on random forms mod p^m.
CheckResult check_contraction_anchor(std::int64_t p, int m, int trials, std::uint64_t seed);
/// Rank <= 1 matrices A mod p with A Q A^T = 0 and Q A^T = adj(A) Q, for
/// reduced forms with (D/p) = +1 and |D| <= max_disc: con(rho(A) x, Q^vee)
/// vanishes for every basis vector x of Sym^(j-2).
CheckResult check_kernel_shadow(std::int64_t p, int j, std::int64_t max_disc);
/// The same with only the condition A Q A^T = 0 (this is false in general).
CheckResult check_kernel_isotropic_only(std::int64_t p, int j, std::int64_t max_disc);
/// The same with A, B from orbit_cycle reduced mod p.
CheckResult check_kernel_orbit(std::int64_t p, int j, std::int64_t max_disc);

// --- root data -------------------------------------------------------------

CheckResult check_dot_actions(int trials, std::uint64_t seed);
CheckResult check_lds_families(std::int64_t lo, std::int64_t hi);
CheckResult check_serre_involution(std::int64_t lo, std::int64_t hi);
CheckResult check_weyl_cones(std::int64_t range);
CheckResult check_hecke_ordinary(std::int64_t p, int trials, std::uint64_t seed);
CheckResult check_tau_walls(std::int64_t lo, std::int64_t hi);
CheckResult check_lan_suh_monotone(std::int64_t p, std::int64_t range);
CheckResult check_selmer_ledger(int range);

// --- commutative algebra ---------------------------------------------------

CheckResult check_defect_examples(std::int64_t p);
CheckResult check_defect_additivity(std::int64_t p, int trials, std::uint64_t seed);
CheckResult check_square_presentations(std::int64_t p, int trials, std::uint64_t seed,
                                       std::size_t max_dim = 12);
CheckResult check_idempotents(std::int64_t p, int m, int trials, std::uint64_t seed);

// --- suites ----------------------------------------------------------------

struct SuiteOptions {
  std::int64_t p = 5;
  int trials = 20;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument on an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace gsp4
