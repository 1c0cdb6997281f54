#pragma once

#include <span>
#include <vector>

namespace pamkit {

/// Perceptual parameters of the two-level binary hierarchical Gaussian
/// filter. omega2 is the tonic log-volatility of the second level; larger
/// values mean faster belief updating.
struct HgfParams {
    double omega2 = 0.0;
    double mu2_init = 0.0;
    double sigma2_init = 1.0;
};

/// Per-trial belief states. muhat1/pihat1 are the prediction (before seeing
/// the trial's input) and its precision; mu2/sigma2 the level-2 posterior.
struct HgfTrajectory {
    std::vector<double> muhat1;
    std::vector<double> pihat1;
    std::vector<double> muhat2;
    std::vector<double> sigmahat2;
    std::vector<double> mu2;
    std::vector<double> sigma2;

    std::size_t size() const { return muhat1.size(); }
};

/// Precision of a Bernoulli prediction, 1/(muhat1*(1-muhat1)); >= 4.
double prediction_precision(double muhat1);

/// Filter a binary input sequence. Predictions at trial t depend only on
/// inputs before t. Throws std::invalid_argument on non-binary inputs or
/// non-positive sigma2_init.
HgfTrajectory hgf_filter(std::span<const int> u, const HgfParams& params);

}  // namespace pamkit
