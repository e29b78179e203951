#ifndef CONFSPACE_CONFIG_HPP
#define CONFSPACE_CONFIG_HPP

#include <string>
#include <vector>

#include "confspace/manifold.hpp"
#include "confspace/symop.hpp"

namespace confspace {

/// Parsed run configuration: the manifold chart data plus the truncation
/// window, with a stable digest of the canonical serialization.
struct RunConfig {
    ManifoldSpec manifold;
    std::string config_hash;
};

/// Strict parse: unknown keys are rejected, all values type-checked.
RunConfig config_from_json_text(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical serialization (sorted keys, all fields explicit, no whitespace).
std::string canonical_config_json(const ManifoldSpec& spec);
std::string config_hash_of(const ManifoldSpec& spec);

/// Classes file: JSON array of {"coeff": rational string, "symbol": symbol
/// text}; each entry is one class.
std::vector<SymVec> classes_from_json_text(const std::string& text, const ManifoldSpec& spec);
std::vector<SymVec> load_classes(const std::string& path, const ManifoldSpec& spec);

/// Number of worker threads: CONFSPACE_THREADS when set, else the hardware
/// concurrency, always at least 1.
int thread_cap();

/// Deterministic indexed parallel loop; fn(i) must only touch slot i state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace confspace

#endif
