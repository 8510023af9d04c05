#include "smearlab/spin_common.hpp"

#include <string>

namespace smearlab {

std::string_view axis_name(Axis a) {
    switch (a) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        case Axis::z: return "z";
    }
    return "?";
}

Axis parse_axis(std::string_view text) {
    if (text == "x") return Axis::x;
    if (text == "y") return Axis::y;
    if (text == "z") return Axis::z;
    throw DomainError("unknown axis '" + std::string(text) + "'");
}

}  // namespace smearlab
