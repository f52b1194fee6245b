#pragma once

#include <string>
#include <vector>

#include "riskload/errors.hpp"

namespace riskload {

enum class UtilityFamily { Exponential, Quadratic };

const char* to_string(UtilityFamily family);
UtilityFamily utility_family_from_string(const std::string& name);

/// Concave, satiating utility of consumption, parameterized by the consumer's
/// risk-aversion coefficient `a`:
///
///   Exponential:  U(D) = 1 - exp(-a D)        for D >= 0
///   Quadratic:    U(D) = -(1 - a D)^2         for 0 <= D <= 1/a
///
/// Marginal utility is positive and non-increasing on the domain. The
/// quadratic family saturates at D = 1/a, where marginal utility vanishes;
/// evaluation outside the domain is rejected rather than clamped so that
/// derivative-based quantities stay meaningful.
class UtilityModel {
public:
    static UtilityModel exponential(double risk_aversion);
    static UtilityModel quadratic(double risk_aversion);

    UtilityFamily family() const { return family_; }
    double risk_aversion() const { return risk_aversion_; }

    /// Upper end of the demand domain: 1/a for quadratic, +infinity otherwise.
    double saturation_demand() const;

    /// U(d). Throws ValidationError outside the demand domain.
    double value(double d) const;

    /// dU/dD. Strictly positive on the open domain, zero at quadratic saturation.
    double marginal(double d) const;

    /// Arrow-Pratt absolute risk aversion, -U''/U'. Constant `a` for the
    /// exponential family; a/(1 - a d) for the quadratic. Throws NumericError
    /// at the quadratic saturation point where marginal utility vanishes.
    double arrow_pratt(double d) const;

    /// Inverse of marginal(): the demand at which marginal utility equals m,
    /// clamped to the demand domain (0 when m exceeds the marginal utility at
    /// zero consumption). Requires m > 0.
    double demand_for_marginal(double m) const;

    /// Marginal utility at zero consumption: a (exponential) or 2a (quadratic).
    /// demand_for_marginal(m) == 0 for every m at or above this threshold.
    double marginal_at_zero() const;

private:
    UtilityModel(UtilityFamily family, double risk_aversion);

    UtilityFamily family_;
    double risk_aversion_;
};

/// Anchor point a utility model was calibrated against, plus the resulting
/// currency-unit scale A that makes A * U'(d0) equal the initial price.
struct PeriodCalibration {
    double d0 = 0.0;   ///< initial demand
    double pi0 = 0.0;  ///< initial price
    double scale = 0.0; ///< calibration coefficient A, currency units
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

/// Itemized feasibility check for a (family, a, d0, pi0) tuple. Violations are
/// returned as data; nothing throws.
ValidationResult validate_model(UtilityFamily family, double risk_aversion,
                                double d0, double pi0);

/// Computes the calibration coefficient A = pi0 / U'(d0), so that the model's
/// welfare A U(D) - pi D is maximized exactly at d0 when the price is pi0.
/// Throws ValidationError when the anchor is infeasible (d0 <= 0, pi0 <= 0, or
/// quadratic a d0 >= 1).
PeriodCalibration calibrate(const UtilityModel& model, double d0, double pi0);

} // namespace riskload
