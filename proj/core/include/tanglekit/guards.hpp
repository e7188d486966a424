#pragma once

#include <cstdint>

namespace tk {

/// Instance-size caps for the exhaustive searches. Exceeding a cap raises
/// GuardError instead of running for hours.
struct Guards {
  int max_separation_vertices = 12;
  int max_tangle_vertices = 8;
  std::int64_t max_separations = 2'000'000;
  int max_subdivision_vertices = 20;
  int max_minor_vertices = 16;
  int max_spider_vertices = 16;
  std::int64_t max_embeddings = 20'000'000;
  int max_metric_walk_length = 10;
  /// Disables every vertex-count cap above (the count caps still apply).
  bool override_vertex_caps = false;

  /// Defaults, then TANGLEKIT_* environment variables layered on top.
  static Guards from_environment();
};

}  // namespace tk
