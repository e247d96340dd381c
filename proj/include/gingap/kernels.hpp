#pragma once

#include <complex>

namespace gingap::kernels {

enum class Process { RealGinibreBulk, Coalescence, Annihilation };

/// Kernel parameterization. `rho` is the process's own particle density per
/// unit length: the real-Ginibre bulk fixes rho = 1/sqrt(2*pi); the two
/// diffusion limits accept any rho > 0. The annihilation kernel is the
/// half-density thinning of the coalescence kernel: each entry equals half
/// the coalescence entry at density 2*rho, so that Pfaffian correlation
/// evaluation needs no process-specific code.
class KernelParams {
 public:
  static KernelParams real_ginibre_bulk();
  static KernelParams coalescence(double rho);
  static KernelParams annihilation(double rho);

  Process process() const { return process_; }
  double rho() const { return rho_; }

 private:
  KernelParams(Process p, double rho) : process_(p), rho_(rho) {}
  Process process_;
  double rho_;
};

/// Smoothing entry S(x,y): Gaussian in x-y, S(x,x) = rho for rG
/// (after the Pfaffian prefactor bookkeeping, rho_1 = rho for all three).
double s_kernel(double x, double y, const KernelParams& p);

/// Integrated entry I(x,y) = (1/2) sgn(y-x) - integral_x^y S(x,u) du,
/// in closed form via erf; odd under x <-> y.
double i_kernel(double x, double y, const KernelParams& p);

/// Derivative entry D(x,y) = dS(x,y)/dx; odd under x <-> y.
double d_kernel(double x, double y, const KernelParams& p);

/// The four entries of the 2x2 block K(x,y) = [[S(x,y), I(x,y)],
///                                             [D(x,y), S(y,x)]].
struct KernelBlock {
  double s_xy, i_xy, d_xy, s_yx;
};

KernelBlock kernel_block(double x, double y, const KernelParams& p);

enum class KernelEntry { S, D, I };

/// Fourier transforms of the bulk rG kernel entries (rho = 1/sqrt(2*pi)):
///   S~(k) = exp(-k^2/2), D~(k) = i k exp(-k^2/2),
///   I~(k) = (1/(i k)) (-1 + exp(-k^2/2)).
/// The I transform has a removable singularity at k = 0; callers must keep
/// their k-grids away from it, so k = 0 is a domain error for entry I.
std::complex<double> kernel_fourier(double k, KernelEntry entry);

}  // namespace gingap::kernels
