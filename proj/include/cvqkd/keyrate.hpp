#pragma once

#include <map>
#include <string>

#include "cvqkd/channel.hpp"
#include "cvqkd/subtraction.hpp"

namespace cvqkd {

enum class Regime { asymptotic, finite, composable };

/// How the parameter-estimation noise variance sigma^2 is modeled in the
/// finite-size worst case (Bob's diagonal is t^2*X' + sigma^2):
///  - consistent:    sigma^2 = b_nominal - eta*X', exact m->infinity limit
///                   for every source (equals paper_literal at j = 1)
///  - standard:      sigma^2 = 1 + eta*epsilon
///  - paper_literal: sigma^2 = 1 + eta*(epsilon - 3)
enum class SigmaNoiseMode { consistent, standard, paper_literal };

/// Mutual information path: from the propagated covariance matrix, or from
/// the printed SNR model (the composable rate always uses the SNR model).
enum class MutualInfoModel { covariance, snr };

/// Source of the two-mode state entering the channel.
///  - subtracted: photon-subtracted state (X', Y', Z' of the subtraction module)
///  - four_state: plain QPSK source, a = b = 1 + 2 alpha^2, c = Z4, P = 1
enum class SourceModel { subtracted, four_state };

struct FormulaModes {
    FormulaMode mutual_information = FormulaMode::corrected;
    FormulaMode holevo = FormulaMode::corrected;
    FormulaMode correlation = FormulaMode::corrected;
    SigmaNoiseMode sigma_noise = SigmaNoiseMode::consistent;
};

FormulaModes modes_corrected();
FormulaModes modes_paper_literal();

struct KeyRateResult {
    double rate = 0.0;  // bits per pulse, may be negative
    double i_ab = 0.0;
    double s_eb = 0.0;
    Regime regime = Regime::asymptotic;
    bool feasible = false;  // rate > 0
    std::map<std::string, double> diagnostics;
};

/// One fully specified key-rate evaluation point.
struct ScenarioParams {
    double v_mod = 2.0;
    double mu = 1.0;
    int j = 0;
    SourceModel source = SourceModel::subtracted;
    double zeta_opt = 1.0;
    ChannelModel channel;
    DetectorModel detector;
    FormulaModes modes;
    MutualInfoModel i_model = MutualInfoModel::covariance;
};

}  // namespace cvqkd
