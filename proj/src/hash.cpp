#include "noiserect/hash.hpp"

#include <cstdio>

namespace noiserect {

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

}  // namespace noiserect
