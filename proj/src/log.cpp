#include "roomeq/log.hpp"

#include <atomic>
#include <cstdio>
#include <string>

namespace roomeq {

namespace {
std::atomic<int> g_verbosity{1};
}

void set_verbosity(int level) { g_verbosity.store(level); }
int verbosity() { return g_verbosity.load(); }

void warn(std::string_view msg) {
  if (g_verbosity.load() >= 1) {
    std::fprintf(stderr, "warning: %.*s\n", static_cast<int>(msg.size()), msg.data());
  }
}

void info(std::string_view msg) {
  if (g_verbosity.load() >= 2) {
    std::fprintf(stderr, "info: %.*s\n", static_cast<int>(msg.size()), msg.data());
  }
}

}  // namespace roomeq
