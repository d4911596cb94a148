#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "crgp/constraints.hpp"
#include "crgp/decomposition.hpp"
#include "crgp/process.hpp"

namespace crgp::harness {

struct Stats {
  std::size_t count = 0;
  double mean = 0;
  double std = 0;  // sample standard deviation
  double q10 = 0;
  double q50 = 0;
  double q90 = 0;
};

/// Linear-interpolation quantile of sorted data (p in [0,1]).
double quantile(const std::vector<double>& sorted, double p);
Stats summarize(std::vector<double> values);

unsigned default_jobs();

/// Runs task(i) for i in [0, count) on up to `jobs` threads. Callers store
/// results by index, so the outcome never depends on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

// ---------------------------------------------------------------- analytic

/// Rows for c = c_min, c_min + step, ... up to c_max.
void write_analytic(std::ostream& os, double c_min, double c_max, double step);

// ------------------------------------------------------------------- sweep

enum class SweepMode { step, accepted };
std::string_view to_string(SweepMode mode);

struct SweepConfig {
  std::vector<Vertex> ns;
  std::vector<double> cs;
  SweepMode mode = SweepMode::step;  // t = cn/2 or m0 = cn/2
  int replicates = 1;
  std::uint64_t master_seed = 0;
  GraphClass cls = GraphClass::planar;
  unsigned jobs = 1;
};

struct ReplicateRow {
  std::size_t cell = 0;
  int replicate = 0;
  std::uint64_t seed = 0;
  std::uint64_t t = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::uint64_t giant = 0;
  std::string error;
};

struct CellSummary {
  Vertex n = 0;
  double c = 0;
  std::uint64_t target = 0;  // t or m0
  std::size_t failures = 0;
  Stats t, m, r, giant;
  std::string first_error;
};

struct SweepResult {
  std::vector<CellSummary> cells;
  std::vector<ReplicateRow> rows;  // ordered by (cell, replicate)
};

/// Replicate seed: split(split(master, cell), replicate).
std::uint64_t replicate_seed(std::uint64_t master, std::size_t cell, int replicate);

SweepResult run_sweep(const SweepConfig& cfg);
/// Cell statistics from the replicate rows (exact, sequential).
std::vector<CellSummary> aggregate(const SweepConfig& cfg, const std::vector<ReplicateRow>& rows);

inline constexpr std::string_view kSweepHeader =
    "class,mode,n,c,target,replicates,failures,"
    "mean_t,std_t,q10_t,q50_t,q90_t,mean_m,std_m,q10_m,q50_m,q90_m,"
    "mean_r,std_r,q10_r,q50_r,q90_r,mean_giant,std_giant,q10_giant,q50_giant,q90_giant";
inline constexpr std::string_view kReplicateHeader = "class,mode,n,c,replicate,seed,t,m,r,giant,error";

void write_sweep(std::ostream& os, const SweepConfig& cfg, const SweepResult& result);
void write_replicates(std::ostream& os, const SweepConfig& cfg, const SweepResult& result);

// ------------------------------------------------------------------ census

struct CensusOptions {
  Vertex n = 0;
  GraphClass cls = GraphClass::planar;
  std::vector<std::uint64_t> ts;  // ascending
  int replicates = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  Vertex cap = 4000;
};

struct CensusRow {
  std::uint64_t seed = 0;
  std::uint64_t t = 0;
  Census census;
};

/// One row per (replicate, t); each replicate is a single run censused at
/// every requested t. Throws std::invalid_argument if n exceeds the cap.
std::vector<CensusRow> run_census(const CensusOptions& opts);
void write_census(std::ostream& os, const CensusOptions& opts, const std::vector<CensusRow>& rows);

// ---------------------------------------------------------------- classify

struct ClassifyOptions {
  Vertex n = 0;
  GraphClass cls = GraphClass::planar;
  std::uint64_t t_lo = 1;
  std::uint64_t t_hi = 1;
  int replicates = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct ClassifyRow {
  std::uint64_t seed = 0;
  QueryTable table;
};

std::vector<ClassifyRow> run_classify(const ClassifyOptions& opts);
void write_classify(std::ostream& os, const ClassifyOptions& opts,
                    const std::vector<ClassifyRow>& rows);

// --------------------------------------------------------------- decompose

/// Smallest l such that K_l is not a minor of any graph in the class.
int excluded_clique(GraphClass cls);

struct DecomposeOptions {
  Vertex n = 0;
  GraphClass cls = GraphClass::planar;
  std::uint64_t t = 0;
  std::uint64_t seed = 0;
  double a = 0;  // <= 0: s/(3l) with s = t - n/2
};

/// Decomposition of the largest component of P(n,t): the 2-core carries
/// weights |T_x| (sizes of the pendant trees), is split by
/// weighted_decomposition, and each part is expanded back to process-graph
/// vertices.
struct DecomposeResult {
  std::size_t giant = 0;
  std::size_t core_vertices = 0;
  std::size_t max_degree = 0;
  double max_weight = 0;
  double a = 0;
  Decomposition core_parts;
  std::vector<std::vector<Vertex>> parts;  // process-graph labels, ascending
  std::vector<std::string> issues;         // decomposition guarantees that failed
};

DecomposeResult run_decompose(const DecomposeOptions& opts);
/// Part-per-line dump: space-separated vertex labels.
void write_parts(std::ostream& os, const DecomposeResult& result);

}  // namespace crgp::harness
