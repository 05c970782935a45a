#pragma once

#include <cstdint>
#include <vector>

#include "cclab/bigint.hpp"

namespace cclab {

/// Truncated formal power series with exact integer coefficients.
///
/// Every operation is exact mod q^{degree+1}. The workhorse operations are
/// the stride updates for multiplying by (1 - q^a) and its inverse, which is
/// all Euler-product manipulation needs.
class SeriesPoly {
public:
    explicit SeriesPoly(std::int64_t degree = 2000);

    /// The series 1 + 0q + 0q^2 + ...
    static SeriesPoly one(std::int64_t degree);

    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const BigCount& coeff(std::int64_t i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    BigCount& coeff(std::int64_t i) { return coeffs_[static_cast<std::size_t>(i)]; }

    const std::vector<BigCount>& coeffs() const { return coeffs_; }

    /// Multiply in place by 1/(1 - q^a), i.e. exact division by (1 - q^a).
    /// Prefix-sum stride: c[i] += c[i-a] for i = a..degree.
    void divide_one_minus(std::int64_t a);

    /// Multiply in place by (1 - q^a): c[i] -= c[i-a] for i = degree..a.
    void multiply_one_minus(std::int64_t a);

    /// Truncated product.
    SeriesPoly operator*(const SeriesPoly& rhs) const;

private:
    std::vector<BigCount> coeffs_;
};

} // namespace cclab
