#include "cclab/bigint.hpp"

#include <cmath>

#include "cclab/errors.hpp"

namespace cclab {

double log_big(const BigCount& v) {
    if (v <= 0) throw InvalidInputError("log_big: argument must be positive");
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double ratio_as_double(const BigCount& num, const BigCount& den) {
    if (den == 0) throw InvalidInputError("ratio_as_double: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_d();
}

} // namespace cclab
