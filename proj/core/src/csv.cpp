#include "crgp/csv.hpp"

#include <charconv>
#include <ostream>

namespace crgp::csv {

std::string number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_trace(std::ostream& os, const ProcessTrace& trace) {
  for (const auto& rec : trace.records) {
    os << trace.seed << ',' << to_string(trace.cls) << ',' << trace.n << ',' << rec.t << ','
       << rec.m << ',' << rec.r << ',' << rec.giant << ',';
    if (rec.er_excess) os << *rec.er_excess;
    os << '\n';
  }
}

void write_census_row(std::ostream& os, std::uint64_t seed, GraphClass cls, Vertex n,
                      std::uint64_t t, const Census& c) {
  os << seed << ',' << to_string(cls) << ',' << n << ',' << t << ',' << c.forbidden << ','
     << c.addable << ',' << c.edges << '\n';
}

void write_classify_row(std::ostream& os, std::uint64_t seed, GraphClass cls, Vertex n,
                        std::uint64_t t_lo, std::uint64_t t_hi, const QueryTable& q) {
  os << seed << ',' << to_string(cls) << ',' << n << ',' << t_lo << ',' << t_hi << ','
     << q.inside_rejected << ',' << q.inside_accepted << ',' << q.outside_rejected << ','
     << q.outside_accepted << '\n';
}

void write_analytic_row(std::ostream& os, const analytic::CurvePoint& p) {
  os << number(p.c) << ',' << number(p.beta) << ',' << number(p.f) << ',' << number(p.f_prime)
     << ',' << number(p.rejected_per_vertex) << ',' << number(p.rejected_fraction) << ','
     << number(p.forbidden_density) << ',' << number(p.giant_fraction_process) << ','
     << number(p.uniform_giant_fraction) << '\n';
}

}  // namespace crgp::csv
