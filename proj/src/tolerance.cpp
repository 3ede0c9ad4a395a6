#include "rescool/tolerance.hpp"

#include <atomic>

#include "rescool/errors.hpp"

namespace rescool {

namespace {
std::atomic<double> g_scale{1.0};
}

double tolerance_scale() noexcept { return g_scale.load(std::memory_order_relaxed); }

void set_tolerance_scale(double scale) {
    if (!(scale > 0.0)) {
        throw InvalidArgument("tolerance scale must be positive");
    }
    g_scale.store(scale, std::memory_order_relaxed);
}

}  // namespace rescool
