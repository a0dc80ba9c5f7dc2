#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "cvs/errors.hpp"
#include "cvs/schwinger_channel.hpp"

namespace cvs {

namespace {

using cplx = std::complex<double>;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

// ln Gamma for Re z >= 1/2, kept in log form so that |Gamma| can be far
// outside the double range (|Gamma(1/2 + iy)| ~ exp(-pi y / 2)).
cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + double(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

cplx complex_lgamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("complex_lgamma: non-finite argument");
  }
  if (is_pole(z)) throw DomainError(fmt::format("complex_lgamma: pole at z = {}", z.real()));
  if (z.real() >= 0.5) return lgamma_right(z);
  // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
  return std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi * z)) -
         lgamma_right(1.0 - z);
}

cplx complex_gamma(cplx z) { return std::exp(complex_lgamma(z)); }

}  // namespace cvs
