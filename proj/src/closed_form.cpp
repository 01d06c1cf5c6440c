#include "tdmv/closed_form.hpp"

#include "tdmv/types.hpp"

namespace tdmv {

Strategy closed_form_global_strategy(const ProcessSpec& spec, int T) {
    spec.validate();
    if (T < 3) throw SizeError("closed_form_global_strategy requires T >= 3");

    const double a = spec.a;
    const double s2 = spec.sigma2;
    Strategy out;
    out.weights = Eigen::VectorXd::Zero(T);
    out.lambda2 = 0.0;

    const bool white = (spec.kind == ProcessKind::WhiteNoise) || a == 0.0;
    if (spec.layer == Layer::PriceLevel) {
        if (white) {
            out.weights.setConstant(1.0 / T);
            out.lambda1 = s2 / T;
        } else {
            const double l1 = 1.0 / (2.0 + (T - 2) * (1.0 - a));
            out.weights.setConstant(l1 * (1.0 - a));
            out.weights(0) = out.weights(T - 1) = l1;
            out.lambda1 = (1.0 + a) * s2 * l1;
        }
    } else {
        if (white) {
            out.weights(0) = 1.0;
            out.lambda1 = s2;
        } else {
            out.weights(0) = 1.0 + a;
            out.weights(1) = -a;
            out.lambda1 = (1.0 - a * a) * s2;
        }
    }
    return out;
}

}  // namespace tdmv
