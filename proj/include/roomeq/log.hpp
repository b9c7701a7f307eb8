#ifndef ROOMEQ_LOG_HPP
#define ROOMEQ_LOG_HPP

#include <string_view>

namespace roomeq {

// 0 = silent, 1 = warnings (default), 2 = info.
void set_verbosity(int level);
int verbosity();

void warn(std::string_view msg);
void info(std::string_view msg);

}  // namespace roomeq

#endif  // ROOMEQ_LOG_HPP
