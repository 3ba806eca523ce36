#pragma once

// The Laplace-exponent calculus for a spectrally positive Lévy model:
//
//   phi(lambda) = sigma^2 lambda^2 - b lambda
//                 + int (e^{-lambda s} - 1 + lambda s 1{s<1}) nu(ds),
//
// E e^{-lambda X_t} = e^{t phi(lambda)}, together with its derivatives, the
// holomorphic extension to Re z >= 0, the characteristic exponent
// psi(xi) = -phi(-i xi) (E e^{i xi X_t} = e^{-t psi(xi)}), the concentration
// functions K and h, the curvature function Phi(x) = x^2 phi''(x), monotone
// envelopes with generalized inverses, the roots theta0/theta1, the ladder
// exponent phi(lambda)/(lambda - theta0), and empirical scaling indices.
//
// Construction validates the model and locates the roots; afterwards the
// suite is immutable and safe for concurrent reads (envelope tables refine
// behind snapshot swaps).

#include <complex>
#include <memory>
#include <optional>

#include "spd/envelope_table.hpp"
#include "spd/model.hpp"

namespace spd {

enum class ScalingTarget { phi, phi_dd, re_psi, Phi };

struct ScalingReport {
    double alpha_hat = 0.0;  // empirical lower index (inf of pairwise log-slopes)
    double beta_hat = 0.0;   // empirical upper index (sup of pairwise log-slopes)
    double c_hat = 1.0;      // worst lower comparability constant vs declared_alpha (<= 1)
    double C_hat = 1.0;      // worst upper comparability constant vs declared_beta (>= 1)
    double probe_lo = 0.0;
    double probe_hi = 0.0;
    ScalingTarget target = ScalingTarget::phi;
};

enum class LadderReading {
    as_printed,  // gamma((x,inf)) = e^{theta0} * x * int_x^inf e^{-theta0 u} nu((u,inf)) du
    corrected,   // gamma((x,inf)) = e^{theta0 x}  * int_x^inf e^{-theta0 u} nu((u,inf)) du
};

class ExponentSuite {
public:
    explicit ExponentSuite(LevyModel model);

    // Envelope tables capture `this`; keep the suite pinned in place.
    ExponentSuite(const ExponentSuite&) = delete;
    ExponentSuite& operator=(const ExponentSuite&) = delete;

    const LevyModel& model() const { return model_; }
    double theta0() const { return theta0_; }  // largest root of phi
    double theta1() const { return theta1_; }  // inf{ s > 0 : phi'(s) > 0 }

    // Laplace exponent and derivatives.  order 0..3; lambda >= 0.
    // Throws DivergentMoment for order >= 1 at lambda = 0 when the defining
    // moment integral is infinite.
    double phi(double lambda, int order = 0) const;

    // Holomorphic extension to Re z >= 0 (used by the vertical-contour
    // inversion); agrees with phi on the real axis.
    std::complex<double> phi_complex(std::complex<double> z) const;

    // psi(xi) = -phi(-i xi); Re psi >= 0, psi(-xi) = conj(psi(xi)).
    std::complex<double> char_exponent(double xi) const;

    // Concentration functions:
    //   K(r) = sigma^2/r^2 + r^-2 int_(0,r) s^2 nu(ds)
    //   h(r) = sigma^2/r^2 + int (1 ^ s^2/r^2) nu(ds)  ( >= K ).
    double pruitt_K(double r) const;
    double pruitt_h(double r) const;

    // Phi(x) = x^2 phi''(x), its running sup, and the generalized inverse
    // sup{r : Phi*(r) <= s}.
    double big_phi(double x) const;
    double big_phi_star(double r) const;
    double big_phi_inv(double s) const;

    // Running sup of Re psi over [0, r] and its generalized inverse.
    double psi_star(double r) const;
    double psi_inv(double s) const;

    // Inverse of phi on (theta0, inf): the unique lambda > theta0 with
    // phi(lambda) = s, for s > 0.
    double phi_inv(double s) const;

    // Inverse of the increasing function phi' on (theta1, inf).  Throws
    // OutOfRange when y <= phi'(theta1+).
    double phi_prime_inv(double y) const;

    // phi(lambda)/(lambda - theta0); throws PoleAtTheta0 near the pole.
    double ladder_exponent(double lambda) const;

    // Tail mass gamma((x, inf)) of the ascending-ladder-height measure under
    // either reading of the prefactor (see LadderReading).
    double ladder_tail(double x, LadderReading reading) const;

    // Empirical scaling indices of the target over a log grid on
    // [probe_lo, probe_hi].  For phi_dd the reported index is the slope + 2,
    // so a pure power phi = lambda^alpha reports alpha for every target.
    ScalingReport scaling_report(ScalingTarget target, double probe_lo,
                                 double probe_hi, int points_per_decade = 16) const;

private:
    double j_real(double lambda, int order) const;

    LevyModel model_;
    double theta0_ = 0.0;
    double theta1_ = 0.0;
    std::unique_ptr<MonotoneEnvelope> phi_star_table_;  // target: Phi(x)
    std::unique_ptr<MonotoneEnvelope> psi_star_table_;  // target: Re psi(r)
};

}  // namespace spd
