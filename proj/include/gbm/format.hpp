#ifndef GBM_FORMAT_HPP
#define GBM_FORMAT_HPP

#include <string>

namespace gbm {

/// Shortest decimal form of v that round-trips, capped at `precision`
/// significant digits. NaN -> "nan", infinities -> "inf" / "-inf".
/// precision must lie in [6, 17].
std::string format_double(double v, int precision);

/// v rounded to `precision` significant decimal digits.
double round_to_precision(double v, int precision);

}

#endif
