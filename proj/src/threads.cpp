#include "dicut/threads.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace dicut {

// Read on every call so a process can change it between runs.
int worker_threads() {
  if (const char* env = std::getenv("DICUT_SKETCH_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace dicut
