#pragma once

namespace cclab {

/// Numeric q-Pochhammer symbol (z; q)_infinity = prod_{j>=0} (1 - z q^j),
/// 0 < q < 1.
///
/// The product is truncated at the smallest J with
///   sum_{j>J} |z| q^j / (1 - q) < tol,
/// which bounds the dropped log-factors, so the result carries a relative
/// truncation error below tol. A factor that lands exactly on zero yields 0
/// (e.g. z = 1); a negative factor means |z| >= 1 entered territory where
/// the log bound fails and a NonConvergenceError is thrown.
double qpochhammer(double z, double q, double tol = 1e-12);

} // namespace cclab
