#include "nilclean/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace nilclean::kernels {

namespace {

const Kernels& select() {
  const char* env = std::getenv("NILCLEAN_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  if (env && std::strcmp(env, "avx2") == 0 && avx2_available())
    return avx2_kernels();
  return avx2_available() ? avx2_kernels() : scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& k = select();
  return k;
}

}  // namespace nilclean::kernels
