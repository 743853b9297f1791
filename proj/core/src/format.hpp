#pragma once

#include <cstdio>
#include <string>

namespace galileo::detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace galileo::detail
