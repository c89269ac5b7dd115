#include "riders/parallel.hpp"

#include <cstdlib>
#include <string>

namespace riders {

std::size_t default_worker_count() {
  const char* env = std::getenv("RIDER_TYPES_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    long v = std::stol(env, &used);
    if (used != std::char_traits<char>::length(env) || v < 1) return 1;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace riders
