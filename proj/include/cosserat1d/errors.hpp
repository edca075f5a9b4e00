#pragma once

#include <stdexcept>
#include <string>

namespace cosserat1d {

// Radicand of f(z) went negative: the double-well formulas are not defined
// at this z for the given moduli.
struct NegativeDiscriminant : std::domain_error {
    double z;
    double radicand;
    NegativeDiscriminant(double z_, double radicand_)
        : std::domain_error("negative discriminant at z = " + std::to_string(z_)),
          z(z_), radicand(radicand_) {}
};

// The +infinity branch of the volume-constrained energy.
struct ConstraintViolation : std::runtime_error {
    double achieved_mean;
    double target;
    ConstraintViolation(double achieved_, double target_)
        : std::runtime_error("volume constraint violated: mean(alpha) = " +
                             std::to_string(achieved_) + ", target = " +
                             std::to_string(target_)),
          achieved_mean(achieved_), target(target_) {}
};

struct WrongRegime : std::domain_error {
    using std::domain_error::domain_error;
};

// The shifted potential V2 came out below -1e-10, i.e. the cached minimum
// w_min is inconsistent with the sampled values.
struct NegativeV2 : std::runtime_error {
    double value;
    double at_alpha;
    NegativeV2(double value_, double at_alpha_)
        : std::runtime_error("V2 < 0 (" + std::to_string(value_) + ") at alpha = " +
                             std::to_string(at_alpha_)),
          value(value_), at_alpha(at_alpha_) {}
};

// Transition profile failed to reach the wells inside the given half width.
struct Stalled : std::runtime_error {
    double half_width;
    explicit Stalled(double half_width_)
        : std::runtime_error("profile stalled: wells not reached within half width " +
                             std::to_string(half_width_)),
          half_width(half_width_) {}
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cosserat1d
