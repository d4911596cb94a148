#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "crgp/analytic.hpp"
#include "crgp/process.hpp"

namespace crgp::csv {

/// Shortest decimal that round-trips the double.
std::string number(double x);

inline constexpr std::string_view kTraceHeader = "seed,class,n,t,m,r,giant,er_excess";
inline constexpr std::string_view kCensusHeader = "seed,class,n,t,forbidden,addable,m";
inline constexpr std::string_view kClassifyHeader =
    "seed,class,n,t_lo,t_hi,inside_rejected,inside_accepted,outside_rejected,outside_accepted";
inline constexpr std::string_view kAnalyticHeader =
    "c,beta,f,f_prime,rejected_per_vertex,rejected_fraction,forbidden_density,giant_fraction,"
    "uniform_giant_fraction";

/// One row per record; er_excess left empty when it was not tracked.
void write_trace(std::ostream& os, const ProcessTrace& trace);
void write_census_row(std::ostream& os, std::uint64_t seed, GraphClass cls, Vertex n,
                      std::uint64_t t, const Census& c);
void write_classify_row(std::ostream& os, std::uint64_t seed, GraphClass cls, Vertex n,
                        std::uint64_t t_lo, std::uint64_t t_hi, const QueryTable& q);
void write_analytic_row(std::ostream& os, const analytic::CurvePoint& p);

}  // namespace crgp::csv
