#pragma once

#include "rtdsp/kernels.hpp"

namespace rtdsp::kernels {

#if defined(RTDSP_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

#if defined(RTDSP_HAVE_NEON)
namespace neon {
extern const KernelTable kTable;
}
#endif

}  // namespace rtdsp::kernels
