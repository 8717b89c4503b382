#include "shiftlr/parallel.hpp"

#include <cstdlib>
#include <string>

namespace shiftlr {

int default_jobs() {
    if (const char* env = std::getenv("SHIFTLR_JOBS")) {
        try {
            if (const int n = std::stoi(env); n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace shiftlr
