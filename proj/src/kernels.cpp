#include "gingap/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "gingap/constants.hpp"
#include "gingap/specialfun.hpp"

namespace gingap::kernels {

namespace {

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::domain_error("KernelParams: rho must be positive and finite");
}

// coalescence forms at density r
inline double s_coal(double d, double r) {
  return 0.5 * r * std::exp(-kPi * r * r * d * d / 4.0);
}
inline double i_coal(double d, double r) {
  // (1/2) sgn(d) - (1/2) erf(sqrt(pi) r d / 2), d = y - x
  return 0.5 * (static_cast<double>(d > 0.0) - static_cast<double>(d < 0.0)) -
         0.5 * specialfun::erf(0.5 * kSqrtPi * r * d);
}
inline double d_coal(double d, double r) {
  // dS/dx with d = y - x
  return 0.5 * kPi * r * r * d * s_coal(d, r);
}

}  // namespace

KernelParams KernelParams::real_ginibre_bulk() {
  return KernelParams(Process::RealGinibreBulk, kInvSqrt2Pi);
}

KernelParams KernelParams::coalescence(double rho) {
  check_rho(rho);
  return KernelParams(Process::Coalescence, rho);
}

KernelParams KernelParams::annihilation(double rho) {
  check_rho(rho);
  return KernelParams(Process::Annihilation, rho);
}

double s_kernel(double x, double y, const KernelParams& p) {
  const double d = y - x;
  switch (p.process()) {
    case Process::RealGinibreBulk:
      return kInvSqrt2Pi * std::exp(-0.5 * d * d);
    case Process::Coalescence:
      return s_coal(d, p.rho());
    case Process::Annihilation:
      return 0.5 * s_coal(d, 2.0 * p.rho());
  }
  throw std::logic_error("s_kernel: unknown process");
}

double i_kernel(double x, double y, const KernelParams& p) {
  const double d = y - x;
  switch (p.process()) {
    case Process::RealGinibreBulk:
      return 0.5 * (static_cast<double>(d > 0.0) - static_cast<double>(d < 0.0)) -
             0.5 * specialfun::erf(d / kSqrt2);
    case Process::Coalescence:
      return i_coal(d, p.rho());
    case Process::Annihilation:
      return 0.5 * i_coal(d, 2.0 * p.rho());
  }
  throw std::logic_error("i_kernel: unknown process");
}

double d_kernel(double x, double y, const KernelParams& p) {
  const double d = y - x;
  switch (p.process()) {
    case Process::RealGinibreBulk:
      return d * kInvSqrt2Pi * std::exp(-0.5 * d * d);
    case Process::Coalescence:
      return d_coal(d, p.rho());
    case Process::Annihilation:
      return 0.5 * d_coal(d, 2.0 * p.rho());
  }
  throw std::logic_error("d_kernel: unknown process");
}

KernelBlock kernel_block(double x, double y, const KernelParams& p) {
  return {s_kernel(x, y, p), i_kernel(x, y, p), d_kernel(x, y, p), s_kernel(y, x, p)};
}

std::complex<double> kernel_fourier(double k, KernelEntry entry) {
  const double g = std::exp(-0.5 * k * k);
  switch (entry) {
    case KernelEntry::S:
      return {g, 0.0};
    case KernelEntry::D:
      return {0.0, k * g};
    case KernelEntry::I: {
      if (k == 0.0)
        throw std::domain_error("kernel_fourier: I has a removable singularity at k = 0");
      // (1/(ik))(-1 + g) = i (1 - g)/k
      return {0.0, (1.0 - g) / k};
    }
  }
  throw std::logic_error("kernel_fourier: unknown entry");
}

}  // namespace gingap::kernels
