#pragma once

// Parameter-grid sweeps written as JSON lines plus a CSV summary.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lefschetz/families.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz::sweep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum class SweepKind { HalfConj, ConjWlpD456, Aci3Mod3, Injn };

std::optional<SweepKind> parse_kind(const std::string& name);
std::string kind_name(SweepKind kind);

struct SweepBounds {
  // half-conj
  int max_sum = 12;     // alpha + beta + gamma, at most 15
  int t_extra = 4;      // t runs over s .. s + t_extra, at most 6
  int wlp_max_sum = 9;  // verdicts computed only up to this sum, at most 12
  // conj-wlp-d456
  int r_min = 4, r_max = 5;  // 4 <= r <= 6
  int k_min = 2, k_max = 5;  // 2 <= k <= 6
  std::vector<int> degrees{4, 5, 6};
  // aci3-mod3
  int max_param = 5;  // a, b, c, at most 6
  // injn
  int n_min = 2, n_max = 4;  // N at most 6
  int seeds = 3;             // general forms per N, at most 10
};

struct SweepConfig {
  SweepKind kind = SweepKind::HalfConj;
  SweepBounds bounds;
  std::vector<std::uint64_t> characteristics;  // empty: the kind's default list
  std::uint64_t seed = wlp::kDefaultSeed;
  std::size_t trials = 5;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Throws CapacityError when a bound exceeds the caps above.
void check_bounds(const SweepConfig& config);

std::vector<std::uint64_t> effective_characteristics(const SweepConfig& config);

struct HalfConjPoint {
  int alpha, beta, gamma, t;
};
struct ConjPoint {
  int r, k, d;
};
struct InjnPoint {
  int N;
  families::InjnVariant variant;
  std::uint64_t seed;
};
using SweepPoint = std::variant<HalfConjPoint, ConjPoint, families::Aci3, InjnPoint>;

/// Grid points in their fixed enumeration order.
std::vector<SweepPoint> sweep_grid(const SweepConfig& config);

/// One record; "wall_ms" is the last key.
Json evaluate_point(const SweepConfig& config, const SweepPoint& point);

/// Verdict as a JSON object.
Json verdict_json(const wlp::WlpVerdict& verdict);

struct SweepResult {
  std::size_t records = 0;
  std::size_t not_ok = 0;  // records whose proven-statement checks failed
};

/// Evaluates the grid on a worker pool and writes records in grid order.
/// The CSV summary is written when csv is non-null.
SweepResult run_sweep(const SweepConfig& config, std::ostream& jsonl, std::ostream* csv = nullptr);

/// A record without its "wall_ms" field, for reproducibility comparisons.
Json without_timing(Json record);

}  // namespace lefschetz::sweep
