#pragma once

#include "cvqkd/covariance.hpp"

namespace cvqkd {

/// Lossy, noisy channel. Either the distance or the transmittance is the
/// source of truth; the other is derived.
struct ChannelModel {
    double eta = 1.0;            // transmittance, (0, 1]
    double epsilon = 0.0;        // excess noise at channel input, SNU
    double distance_km = 0.0;
    double attenuation_db_per_km = 0.2;

    static ChannelModel from_distance(double distance_km, double epsilon,
                                      double attenuation_db_per_km = 0.2);
    static ChannelModel from_eta(double eta, double epsilon);
};

/// Homodyne detector at the receiver plus the reconciliation efficiency.
struct DetectorModel {
    double tau = 1.0;    // detection efficiency, (0, 1]
    double v_el = 0.0;   // electronic noise, SNU
    double beta = 1.0;   // reconciliation efficiency, (0, 1]
};

struct NoiseBudget {
    double eta = 1.0;
    double chi_line = 0.0;  // (1-eta)/eta + epsilon
    double chi_hom = 0.0;   // ((1-tau) + v_el)/tau
    double chi_tot = 0.0;   // chi_line + chi_hom/eta
};

double transmittance_from_distance(double distance_km, double attenuation_db_per_km);

NoiseBudget noise_budget(const ChannelModel& ch, const DetectorModel& det);

/// Propagate a two-mode state through the channel:
/// (a, b, c) -> (a, eta*(b + chi_line), sqrt(eta)*c).
TwoModeCovariance propagate(const TwoModeCovariance& cov, const ChannelModel& ch);

}  // namespace cvqkd
