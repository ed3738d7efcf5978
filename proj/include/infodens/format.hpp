#pragma once

#include <sstream>
#include <string>

namespace infodens {

inline constexpr const char* kToolName = "infodens";
inline constexpr const char* kToolVersion = "1.0.0";

/// 9-significant-digit default-format number (printf %.9g equivalent).
/// Every number the tool prints goes through here, so output files are
/// byte-comparable across runs and machines.
inline std::string fmt9(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

} // namespace infodens
