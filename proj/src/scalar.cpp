#include "mhq/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhq {

namespace {
struct PrecisionInit {
    PrecisionInit() { Real::default_precision(kDefaultPrecision); }
};
const PrecisionInit precision_init{};
}  // namespace

void set_precision(unsigned digits) {
    Real::default_precision(std::max(digits, kMinPrecision));
}

unsigned precision() { return static_cast<unsigned>(Real::default_precision()); }

Real pi() { return 4 * atan(Real(1)); }

Real tol_guard(int guard_digits) {
    return pow(Real(10), guard_digits - static_cast<int>(precision()));
}

std::string to_decimal_string(const Real& x, unsigned digits) {
    if (digits == 0) digits = precision();
    return x.str(digits, std::ios_base::scientific);
}

Real parse_real(const std::string& s) {
    try {
        return Real(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
}

}  // namespace mhq
