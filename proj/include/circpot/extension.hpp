#pragma once

// Reflection extension of a function from I = (-theta, theta) to the larger
// arc J = (-2theta/(1+gamma), 2theta/(1+gamma)), the Lipschitz bump phi and
// the test function F built from them.

#include "circpot/circle.hpp"
#include "circpot/samples.hpp"

namespace circpot {

// Largest extension ratio D_J(f~)/D_I(f) accepted by the checks.
inline constexpr double kExtensionRatioCeiling = 21.0;

class ExtensionSetup {
 public:
  // Requires 0 < gamma < 1 and 0 < theta <= gamma pi / 2, i.e. |I| <= gamma pi.
  ExtensionSetup(double theta, double gamma);

  double theta() const { return theta_; }
  double gamma() const { return gamma_; }
  // Half-length of J.
  double outer() const { return 2.0 * theta_ / (1.0 + gamma_); }
  // Midpoint of (theta, 2theta/(1+gamma)).
  double theta_gamma() const { return (3.0 + gamma_) * theta_ / (2.0 * (1.0 + gamma_)); }
  // Lower end of the part of I that L and R reflect from.
  double reflected_from() const { return (1.0 + 3.0 * gamma_) * theta_ / (2.0 * (1.0 + gamma_)); }

  Arc arc_i() const { return Arc::centered(0.0, 2.0 * theta_); }
  Arc arc_j() const { return Arc::centered(0.0, 2.0 * outer()); }
  Arc arc_l() const { return Arc::from_length(Angle(theta_), outer() - theta_); }
  Arc arc_r() const { return Arc::from_length(Angle(-outer()), outer() - theta_); }
  Arc arc_i_gamma() const { return Arc::centered(0.0, 2.0 * theta_gamma()); }

  // Realized Lipschitz constant of the bump, c_gamma = |J| / (theta_gamma - theta).
  double c_gamma() const { return arc_j().length() / (theta_gamma() - theta_); }

 private:
  double theta_;
  double gamma_;
};

// Grid cells of I, J and the two reflected pieces. L and R are J minus I on
// either side, so I, L, R partition J exactly.
struct ExtensionCells {
  GridSet i;
  GridSet j;
  GridSet l;
  GridSet r;
};

ExtensionCells extension_cells(const CircleGrid& grid, const ExtensionSetup& setup);

// f~ = f on I, f(e^{i(3theta - t)/2}) on L, f(e^{-i(3theta + t)/2}) on R.
// Off-grid preimages use linear interpolation between samples of I. Values
// outside J are zero. L and R must hold at least 8 cells each.
BoundarySamples extend(const BoundarySamples& f, const ExtensionSetup& setup);

struct ExtensionRatio {
  double d_i = 0.0;
  double d_j = 0.0;
  double ratio = 0.0;
};

// D_{J,alpha}(f~) / D_{I,alpha}(f). Throws DegenerateInputError when f is
// constant on I.
ExtensionRatio extension_ratio(const BoundarySamples& f, const ExtensionSetup& setup, double alpha);

// The six pieces D_I + D_L + D_R + 2 D_{I,L} + 2 D_{I,R} + 2 D_{L,R} of D_J.
struct SixTermDecomposition {
  double d_i = 0.0, d_l = 0.0, d_r = 0.0;
  double d_il = 0.0, d_ir = 0.0, d_lr = 0.0;
  double sum() const { return d_i + d_l + d_r + 2.0 * (d_il + d_ir + d_lr); }
};

SixTermDecomposition six_term_decomposition(const BoundarySamples& f_tilde, const ExtensionSetup& setup,
                                            double alpha);

// Trapezoid: 1 on I, linear down to 0 at +-theta_gamma, 0 outside I_gamma.
BoundarySamples bump_phi(const CircleGrid& grid, const ExtensionSetup& setup);

struct TestFunction {
  BoundarySamples values;
  double mean = 0.0;  // m = (1/|J|) int_J |f~|
};

// F = phi |1 - |f~| / m| on J, zero elsewhere.
TestFunction test_function_f(const BoundarySamples& f_tilde, const BoundarySamples& phi,
                             const ExtensionSetup& setup);

}  // namespace circpot
