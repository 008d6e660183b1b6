#pragma once

#include <functional>

namespace pav::detail {

// run fn on a thread with a large stack; recursive constructions can nest n deep
void run_deep(const std::function<void()>& fn);

}  // namespace pav::detail
