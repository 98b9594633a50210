#ifndef FOCKU_CLI_FORMAT_HPP
#define FOCKU_CLI_FORMAT_HPP

#include <cstdio>
#include <string>

namespace focku::cli {

/// Round-trip decimal form (17 significant digits) for CSV fields.
inline std::string csv_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace focku::cli

#endif
