#pragma once

#include <cstdio>
#include <string>

namespace fpf {

/// Round-trippable decimal text ("%.17g"); negative zero prints as 0.
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace fpf
