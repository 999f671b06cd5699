#pragma once

#include <cstdint>

namespace localcross {

/// When the edges of an X vertex leave the 2-layer DP state.
///   Fixed:   after 2k further X vertices
///   Dynamic: once the following X vertices carry at least 2k+1 edges
enum class WindowPolicy { Fixed, Dynamic };

struct SolverOptions {
    std::int64_t table_cap = 10'000'000;
    WindowPolicy window = WindowPolicy::Dynamic;
    int jobs = 1;  // outer only: threads for the top-level pair loop
};

struct SolveStats {
    std::int64_t entries_created = 0;
    std::int64_t peak_entries = 0;
    std::int64_t max_component_count = 0;  // two-sided only
};

}  // namespace localcross
