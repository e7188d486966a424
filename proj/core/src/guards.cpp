#include "tanglekit/guards.hpp"

#include <cstdlib>
#include <string>

#include "tanglekit/error.hpp"

namespace tk {

namespace {

template <class T>
void overlay(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    long long value = std::stoll(raw, &used);
    if (used != std::string(raw).size() || value <= 0) throw std::invalid_argument(raw);
    field = static_cast<T>(value);
  } catch (const std::exception&) {
    throw InputError(std::string(name) + " must be a positive integer");
  }
}

}  // namespace

Guards Guards::from_environment() {
  Guards g;
  overlay("TANGLEKIT_MAX_SEPARATION_VERTICES", g.max_separation_vertices);
  overlay("TANGLEKIT_MAX_TANGLE_VERTICES", g.max_tangle_vertices);
  overlay("TANGLEKIT_MAX_SEPARATIONS", g.max_separations);
  overlay("TANGLEKIT_MAX_SUBDIVISION_VERTICES", g.max_subdivision_vertices);
  overlay("TANGLEKIT_MAX_MINOR_VERTICES", g.max_minor_vertices);
  overlay("TANGLEKIT_MAX_SPIDER_VERTICES", g.max_spider_vertices);
  overlay("TANGLEKIT_MAX_EMBEDDINGS", g.max_embeddings);
  overlay("TANGLEKIT_MAX_METRIC_WALK_LENGTH", g.max_metric_walk_length);
  if (const char* raw = std::getenv("TANGLEKIT_OVERRIDE_GUARDS"); raw && std::string(raw) == "1")
    g.override_vertex_caps = true;
  return g;
}

}  // namespace tk
