#include "cvs/vn_measures.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cvs/errors.hpp"

namespace cvs {

namespace {

constexpr double kArgumentSlack = 1e-9;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

bool is_product(const TwoModeStdForm& sf) { return sf.c1 == 0.0 && sf.c2 == 0.0; }

}  // namespace

double f_vn(double x, double log_base) {
  if (!std::isfinite(x)) throw DomainError("f_vn argument is not finite");
  if (x < 1.0 - kArgumentSlack) {
    throw DomainError(fmt::format("f_vn argument {:.12g} is below 1", x));
  }
  if (x <= 1.0) return 0.0;
  // (x-1)/2 log((x-1)/2) is O(x-1) and tends to 0 as x -> 1.
  return (xlogx(0.5 * (x + 1.0)) - xlogx(0.5 * (x - 1.0))) / std::log(log_base);
}

double pt_min_symplectic_eigenvalue(const TwoModeStdForm& sf) {
  return symplectic_eigenvalues(sf, /*partial_transpose=*/true).first;
}

bool is_ppt(const TwoModeStdForm& sf) {
  return sf.c1 * sf.c2 >= 0.0 || pt_min_symplectic_eigenvalue(sf) >= 1.0;
}

double log_negativity(const TwoModeStdForm& sf, double log_base) {
  if (is_ppt(sf)) return 0.0;
  return -std::log(pt_min_symplectic_eigenvalue(sf)) / std::log(log_base);
}

double mutual_information_vn(const TwoModeStdForm& sf, double log_base) {
  if (is_product(sf)) return 0.0;
  const auto [nu_minus, nu_plus] = symplectic_eigenvalues(sf);
  const double mi = f_vn(sf.a, log_base) + f_vn(sf.b, log_base) - f_vn(nu_minus, log_base) -
                    f_vn(nu_plus, log_base);
  // Rounding in the entropies can leave -1e-15 close to product states.
  return std::max(0.0, mi);
}

double discord_epsilon(const TwoModeStdForm& sf, Direction direction) {
  const TwoModeStdForm s = direction == Direction::AGivenB ? sf : sf.swapped();
  // The correlation enters through |c1 c2|; the sign of c1 c2 is a local
  // reflection of one mode and cannot change the discord.
  return (s.a + s.a * s.b - std::abs(s.c1 * s.c2)) / (s.b + 1.0);
}

double discord_vn(const TwoModeStdForm& sf, Direction direction, double log_base) {
  const double eps = discord_epsilon(sf, direction);
  if (eps < 1.0 - kArgumentSlack) {
    throw DomainError(fmt::format(
        "discord conditional eigenvalue {:.12g} < 1 for (a={}, b={}, c1={}, c2={})", eps, sf.a,
        sf.b, sf.c1, sf.c2));
  }
  if (is_product(sf)) return 0.0;
  const double measured = direction == Direction::AGivenB ? sf.b : sf.a;
  const auto [nu_minus, nu_plus] = symplectic_eigenvalues(sf);
  return f_vn(measured, log_base) - f_vn(nu_minus, log_base) - f_vn(nu_plus, log_base) +
         f_vn(eps, log_base);
}

VnReport vn_report(const TwoModeStdForm& sf, double log_base) {
  VnReport r;
  r.log_base = log_base;
  r.negativity = log_negativity(sf, log_base);
  r.discord_a_given_b = discord_vn(sf, Direction::AGivenB, log_base);
  r.discord_b_given_a = discord_vn(sf, Direction::BGivenA, log_base);
  r.mutual_info = mutual_information_vn(sf, log_base);
  return r;
}

}  // namespace cvs
