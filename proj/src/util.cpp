#include "r2kit/util.hpp"

#include <cstdlib>
#include <string>

namespace r2kit {

int thread_cap() {
    if (const char* env = std::getenv("R2KIT_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace r2kit
