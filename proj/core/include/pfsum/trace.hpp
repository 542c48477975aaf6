#pragma once

#include <set>
#include <string>
#include <string_view>

namespace pfsum::trace {

/// Collects the route tags marked on this thread while it is alive. Recorders
/// nest; every active recorder sees every mark.
class Recorder {
 public:
  Recorder();
  ~Recorder();
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  const std::set<std::string>& routes() const { return routes_; }

 private:
  friend void mark(std::string_view route);
  std::set<std::string> routes_;
};

/// Tags the current call path with `route` (no-op without a recorder).
void mark(std::string_view route);

}  // namespace pfsum::trace
