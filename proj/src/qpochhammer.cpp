#include "cclab/qpochhammer.hpp"

#include <cmath>
#include <cstdint>

#include "cclab/errors.hpp"

namespace cclab {

double qpochhammer(double z, double q, double tol) {
    if (!(q > 0.0 && q < 1.0)) throw InvalidInputError("qpochhammer: q must be in (0,1)");
    if (!(tol > 0.0)) throw InvalidInputError("qpochhammer: tol must be positive");
    if (z == 0.0) return 1.0;

    // Truncation index: sum_{j>J} |z| q^j / (1-q) = |z| q^{J+1} / (1-q)^2 < tol.
    const double az = std::fabs(z);
    double j_real = (std::log(tol) + 2.0 * std::log1p(-q) - std::log(az)) / std::log(q) - 1.0;
    std::int64_t last = j_real <= 0.0 ? 0 : static_cast<std::int64_t>(std::ceil(j_real));

    double prod = 1.0;
    double zqj = z; // z q^j
    for (std::int64_t j = 0; j <= last; ++j) {
        const double factor = 1.0 - zqj;
        if (factor == 0.0) return 0.0;
        if (factor < 0.0)
            throw NonConvergenceError("qpochhammer: factor went negative (|z| >= 1)");
        prod *= factor;
        zqj *= q;
    }
    return prod;
}

} // namespace cclab
