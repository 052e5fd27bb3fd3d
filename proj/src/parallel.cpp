#include "obstructionist/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace obstructionist {

namespace {
std::atomic<int> requested{0};

bool parallel_disabled() {
  const char* env = std::getenv("OBSTRUCTIONIST_NO_PARALLEL");
  return env && std::strcmp(env, "1") == 0;
}
}  // namespace

int thread_count() {
  if (parallel_disabled()) return 1;
  const int n = requested.load();
  return n > 0 ? n : omp_get_max_threads();
}

void set_thread_count(int n) { requested.store(n > 0 ? n : 0); }

}  // namespace obstructionist
