#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"

namespace lvb::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(LVB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet* initial_selection() {
  const KernelSet* best = avx2_kernels() != nullptr ? avx2_kernels() : &scalar_kernels();
  if (const char* forced = std::getenv("LVB_ISA")) {
    if (std::string(forced) == "scalar") return &scalar_kernels();
  }
  return best;
}

std::atomic<const KernelSet*>& selection() {
  static std::atomic<const KernelSet*> current{initial_selection()};
  return current;
}

}  // namespace

const KernelSet* avx2_kernels() {
#if defined(LVB_HAVE_AVX2)
  static const bool usable = cpu_has_avx2();
  return usable ? &detail::kAvx2Kernels : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() { return *selection().load(std::memory_order_acquire); }

Isa active_isa() { return active().isa; }

bool set_active_isa(Isa isa) {
  const KernelSet* target = isa == Isa::scalar ? &scalar_kernels() : avx2_kernels();
  if (target == nullptr) return false;
  selection().store(target, std::memory_order_release);
  return true;
}

std::string_view to_string(Isa isa) { return isa == Isa::scalar ? "scalar" : "avx2"; }

}  // namespace lvb::kernels
