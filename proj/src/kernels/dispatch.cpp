#include <atomic>
#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace rtdsp::kernels {
namespace {

const KernelTable kScalarTable{Isa::scalar, scalar::apply_gain, scalar::delay, scalar::echo,
                               scalar::downmix, scalar::to_pcm};

bool cpu_has_avx2() noexcept {
#if defined(RTDSP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* best() noexcept {
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const KernelTable* t = kernels_for(isa)) return t;
  }
  return &kScalarTable;
}

std::atomic<const KernelTable*> g_override{nullptr};

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* kernels_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &kScalarTable;
    case Isa::avx2:
#if defined(RTDSP_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2::kTable;
#endif
      return nullptr;
    case Isa::neon:
#if defined(RTDSP_HAVE_NEON)
      return &neon::kTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (kernels_for(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& active() noexcept {
  static const KernelTable* const automatic = best();
  const KernelTable* t = g_override.load(std::memory_order_acquire);
  return t ? *t : *automatic;
}

void select_isa(Isa isa) {
  const KernelTable* t = kernels_for(isa);
  if (!t) {
    throw std::invalid_argument("kernel ISA not available on this machine: " +
                                std::string(isa_name(isa)));
  }
  g_override.store(t, std::memory_order_release);
}

void reset_isa() noexcept { g_override.store(nullptr, std::memory_order_release); }

}  // namespace rtdsp::kernels
