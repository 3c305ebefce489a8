#pragma once

#include "lvb/kernels.hpp"

namespace lvb::kernels::detail {

#if defined(LVB_HAVE_AVX2)
extern const KernelSet kAvx2Kernels;
#endif

}  // namespace lvb::kernels::detail
