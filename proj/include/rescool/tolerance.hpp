#pragma once

namespace rescool {

// Base thresholds. Every check multiplies them by the global tolerance scale.
namespace tolerance {
inline constexpr double hermitian_input = 1e-10;   // accepted |H - H^dagger| on inputs
inline constexpr double hermitian_flag = 1e-12;    // constructed Hamiltonians
inline constexpr double normalized = 1e-10;
inline constexpr double unitary = 1e-9;
inline constexpr double resonance = 1e-9;          // |eps0 - E1 - 1| in strict mode
inline constexpr double zero_branch = 1e-15;
inline constexpr double degeneracy = 1e-9;
}  // namespace tolerance

/// Global multiplier applied to all numeric tolerances (default 1).
double tolerance_scale() noexcept;
void set_tolerance_scale(double scale);

inline double scaled(double base) noexcept { return base * tolerance_scale(); }

/// Restores the previous scale on destruction.
class ToleranceScaleGuard {
public:
    explicit ToleranceScaleGuard(double scale) : previous_(tolerance_scale()) { set_tolerance_scale(scale); }
    ~ToleranceScaleGuard() { set_tolerance_scale(previous_); }
    ToleranceScaleGuard(const ToleranceScaleGuard&) = delete;
    ToleranceScaleGuard& operator=(const ToleranceScaleGuard&) = delete;

private:
    double previous_;
};

}  // namespace rescool
