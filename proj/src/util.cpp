#include <linz/util.hpp>

#include <cstdlib>
#include <string>

namespace linz {

unsigned worker_count() {
  if (const char* env = std::getenv("BESSEL_LINZ_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
      // fall through to hardware default
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace linz
