#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nearadd/rational.hpp"

namespace nearadd {

enum class Mode {
  /// The caller supplies the target stretch eps'; the internal eps is derived
  /// so that the (1 + eps', beta) guarantee holds.
  guaranteed,
  /// The caller supplies the internal eps directly.
  exploratory,
};

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Every numeric parameter of the construction, exact.
///
/// Phases run 0..ell. Phases 0..i0 form the exponential growth stage
/// (deg_i = ceil(n^(2^i / kappa))), phases i0+1..i1 the fixed growth stage
/// (deg_i = ceil(n^rho)); the concluding phase ell also uses ceil(n^rho).
struct PhaseSchedule {
  std::uint64_t n = 0;
  int kappa = 0;
  /// rho = 1/c.
  int c = 0;
  Rational rho;
  Mode mode = Mode::exploratory;
  /// Target multiplicative slack eps'. In exploratory mode this is the value
  /// the internal eps corresponds to, 30 * eps * ell / rho.
  Rational eps_user;
  Rational eps;
  int ell = 0;
  int i0 = 0;
  int i1 = 0;
  /// Cluster radius bounds R_0..R_ell.
  std::vector<Rational> radius;
  /// Distance thresholds delta_0..delta_ell.
  std::vector<Rational> delta;
  /// Degree thresholds deg_0..deg_ell.
  std::vector<std::uint64_t> deg;
  /// ceil(n^rho); also the ruling-set digit base ceil(n^(1/c)).
  std::uint64_t n_rho_ceil = 0;
  /// eps^(-ell).
  Rational beta;
  /// eps <= 1/10 and rho >= 10 eps: the stretch analysis applies.
  bool bound_guaranteed = false;

  std::size_t phase_count() const { return static_cast<std::size_t>(ell) + 1; }
  /// Additive term of the internal stretch bound, 30 / (rho * eps^(ell-1)).
  Rational internal_additive() const;
  /// Multiplicative factor of the internal stretch bound, 1 + 30 eps ell / rho.
  Rational internal_multiplicative() const;
};

/// Throws ConfigError naming the violated constraint when
///  n >= 2, kappa >= 3, c >= 3, c <= kappa, and eps_arg in (0, 1] (guaranteed)
///  or (0, 1) (exploratory) do not all hold.
PhaseSchedule build_schedule(std::uint64_t n, int kappa, int c, Mode mode, const Rational& eps_arg);

/// ell = floor(log2(kappa rho)) + ceil((kappa + 1) / (kappa rho)) - 1.
int phase_count_index(int kappa, int c);

}  // namespace nearadd
