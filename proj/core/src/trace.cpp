#include "pfsum/trace.hpp"

#include <algorithm>
#include <vector>

namespace pfsum::trace {

namespace {

thread_local std::vector<Recorder*> t_active;

}  // namespace

Recorder::Recorder() { t_active.push_back(this); }

Recorder::~Recorder() {
  auto it = std::find(t_active.begin(), t_active.end(), this);
  if (it != t_active.end()) {
    t_active.erase(it);
  }
}

void mark(std::string_view route) {
  for (Recorder* r : t_active) {
    r->routes_.emplace(route);
  }
}

}  // namespace pfsum::trace
