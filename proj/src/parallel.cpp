#include "qsemi/parallel.hpp"

#include <cstdlib>  // for getenv, strtoul

namespace qsemi {

  std::size_t thread_count() {
    if (char const* env = std::getenv("QSEMI_THREADS")) {
      char*         end   = nullptr;
      unsigned long value = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return value;
      }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

}  // namespace qsemi
