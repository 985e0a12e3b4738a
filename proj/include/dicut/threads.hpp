#pragma once

namespace dicut {

/// Worker count for OpenMP regions: DICUT_SKETCH_THREADS if set to a
/// positive integer, otherwise the OpenMP default.
int worker_threads();

}  // namespace dicut
