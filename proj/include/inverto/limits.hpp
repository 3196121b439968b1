#pragma once

#include <algorithm>

namespace inverto {

/// Size caps and parallelism shared by the exhaustive routines.
struct Limits {
    /// Upper bound on orders for exhaustive tables; lowered by --max-order.
    int max_order = 8;
    /// Order 8 tables (2^28 states) are refused unless this is set.
    bool allow_n8 = false;
    /// Worker threads for sharded loops; results do not depend on it.
    int jobs = 1;

    int table_cap() const { return std::min(max_order, allow_n8 ? 8 : 7); }
};

}  // namespace inverto
