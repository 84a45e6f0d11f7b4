#include "symmea/kernels.hpp"

#include <cstdlib>

namespace symmea::kernels {

const KernelTable* avx2_table();  // defined in kernels_avx2.cpp, null off x86

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* best_table() {
  if (const char* forced = std::getenv("SYMMEA_KERNELS")) {
    if (std::string_view(forced) == "scalar") return &scalar();
    if (std::string_view(forced) == "avx2" && cpu_has_avx2() && avx2_table() != nullptr)
      return avx2_table();
  }
  if (cpu_has_avx2() && avx2_table() != nullptr) return avx2_table();
  return &scalar();
}

const KernelTable*& active_slot() {
  static const KernelTable* slot = best_table();
  return slot;
}

}  // namespace

const KernelTable& active() { return *active_slot(); }

std::vector<const KernelTable*> available() {
  std::vector<const KernelTable*> out{&scalar()};
  if (cpu_has_avx2() && avx2_table() != nullptr) out.push_back(avx2_table());
  return out;
}

bool select(std::string_view name) {
  for (const KernelTable* t : available()) {
    if (name == t->name) {
      active_slot() = t;
      return true;
    }
  }
  return false;
}

}  // namespace symmea::kernels
