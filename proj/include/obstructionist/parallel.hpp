#pragma once

namespace obstructionist {

/// Worker count used by the parallel kernels. Defaults to the OpenMP maximum;
/// OBSTRUCTIONIST_NO_PARALLEL=1 in the environment pins it to 1.
int thread_count();
/// n <= 0 restores the default.
void set_thread_count(int n);

}  // namespace obstructionist
