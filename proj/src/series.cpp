#include "cclab/series.hpp"

#include "cclab/errors.hpp"

namespace cclab {

SeriesPoly::SeriesPoly(std::int64_t degree) {
    if (degree < 0) throw InvalidInputError("SeriesPoly: negative degree");
    coeffs_.resize(static_cast<std::size_t>(degree) + 1);
}

SeriesPoly SeriesPoly::one(std::int64_t degree) {
    SeriesPoly s(degree);
    s.coeffs_[0] = 1;
    return s;
}

void SeriesPoly::divide_one_minus(std::int64_t a) {
    if (a <= 0) throw InvalidInputError("divide_one_minus: stride must be positive");
    const auto n = static_cast<std::int64_t>(coeffs_.size());
    for (std::int64_t i = a; i < n; ++i) coeffs_[i] += coeffs_[i - a];
}

void SeriesPoly::multiply_one_minus(std::int64_t a) {
    if (a <= 0) throw InvalidInputError("multiply_one_minus: stride must be positive");
    const auto n = static_cast<std::int64_t>(coeffs_.size());
    for (std::int64_t i = n - 1; i >= a; --i) coeffs_[i] -= coeffs_[i - a];
}

SeriesPoly SeriesPoly::operator*(const SeriesPoly& rhs) const {
    const std::int64_t deg = std::min(degree(), rhs.degree());
    SeriesPoly out(deg);
    for (std::int64_t i = 0; i <= deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::int64_t j = 0; i + j <= deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

} // namespace cclab
