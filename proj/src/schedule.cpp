#include "nearadd/schedule.hpp"

#include "nearadd/errors.hpp"

namespace nearadd {

std::string to_string(Mode mode) { return mode == Mode::guaranteed ? "guaranteed" : "exploratory"; }

Mode parse_mode(const std::string& text) {
  if (text == "guaranteed") return Mode::guaranteed;
  if (text == "exploratory") return Mode::exploratory;
  throw ConfigError("unknown mode '" + text + "' (expected guaranteed or exploratory)");
}

int phase_count_index(int kappa, int c) {
  const Rational kappa_rho(kappa, c);
  const long i0 = floor_log2(kappa_rho);
  const BigInt fixed_stage = ceil(Rational(kappa + 1) / kappa_rho);
  return static_cast<int>(i0 + static_cast<long>(fixed_stage) - 1);
}

Rational PhaseSchedule::internal_additive() const { return Rational(30) / (rho * pow(eps, ell - 1)); }

Rational PhaseSchedule::internal_multiplicative() const { return 1 + Rational(30) * eps * ell / rho; }

PhaseSchedule build_schedule(std::uint64_t n, int kappa, int c, Mode mode, const Rational& eps_arg) {
  if (n < 2) throw ConfigError("n >= 2 violated (n = " + std::to_string(n) + ")");
  if (kappa < 3) throw ConfigError("kappa >= 3 violated (kappa = " + std::to_string(kappa) + ")");
  if (c < 3) throw ConfigError("rho < 1/2 violated: c = 1/rho must be >= 3 (c = " + std::to_string(c) + ")");
  if (c > kappa) {
    throw ConfigError("1/kappa <= rho violated: kappa*rho = " + std::to_string(kappa) + "/" + std::to_string(c) +
                      " < 1");
  }
  if (mode == Mode::guaranteed && !(eps_arg > 0 && eps_arg <= 1)) {
    throw ConfigError("guaranteed mode requires eps' in (0, 1], got " + to_string(eps_arg));
  }
  if (mode == Mode::exploratory && !(eps_arg > 0 && eps_arg < 1)) {
    throw ConfigError("exploratory mode requires eps in (0, 1), got " + to_string(eps_arg));
  }

  PhaseSchedule s;
  s.n = n;
  s.kappa = kappa;
  s.c = c;
  s.rho = Rational(1, c);
  s.mode = mode;
  s.i0 = static_cast<int>(floor_log2(Rational(kappa, c)));
  s.ell = phase_count_index(kappa, c);
  s.i1 = s.ell - 1;

  if (mode == Mode::guaranteed) {
    s.eps_user = eps_arg;
    s.eps = eps_arg * s.rho / (30 * s.ell);
  } else {
    s.eps = eps_arg;
    s.eps_user = Rational(30) * eps_arg * s.ell / s.rho;
  }
  s.bound_guaranteed = s.eps <= Rational(1, 10) && s.rho >= 10 * s.eps;

  const Rational inv_eps = 1 / s.eps;
  s.radius.assign(s.phase_count(), Rational(0));
  for (int i = 0; i < s.ell; ++i) {
    s.radius[i + 1] = (2 / s.rho) * pow(inv_eps, i) + (5 / s.rho) * s.radius[i];
  }
  s.delta.resize(s.phase_count());
  for (int i = 0; i <= s.ell; ++i) s.delta[i] = pow(inv_eps, i) + 2 * s.radius[i];

  const BigInt big_n(n);
  s.n_rho_ceil = to_u64(ceil_power(big_n, 1, static_cast<unsigned long>(c)));
  s.deg.resize(s.phase_count());
  for (int i = 0; i <= s.ell; ++i) {
    if (i <= s.i0) {
      s.deg[i] = to_u64(ceil_power(big_n, 1UL << i, static_cast<unsigned long>(kappa)));
    } else {
      s.deg[i] = s.n_rho_ceil;
    }
  }
  s.beta = pow(inv_eps, s.ell);
  return s;
}

}  // namespace nearadd
