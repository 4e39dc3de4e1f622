//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file profiler.cpp
//  \brief profiling region bookkeeping and report output

#include "pmhd/exec/profiler.hpp"

#include <cstdio>

#include "pmhd/exec/counting.hpp"

namespace pmhd {

Profiler& Profiler::global() {
  static Profiler prof;
  return prof;
}

void Profiler::reset() {
  profiles_.clear();
  index_.clear();
  stack_.clear();
  total_flops_ = 0.0;
  total_bytes_ = 0.0;
}

int Profiler::open_region(std::string_view name) {
  auto it = index_.find(std::string(name));
  int idx;
  if (it == index_.end()) {
    idx = static_cast<int>(profiles_.size());
    profiles_.push_back(KernelProfile{std::string(name), 0, 0.0, 0.0, 0.0, 0.0, false});
    index_.emplace(std::string(name), idx);
  } else {
    idx = it->second;
  }
  stack_.push_back({idx, std::chrono::steady_clock::now(), g_flop_tally.total()});
  return idx;
}

void Profiler::close_region() {
  const OpenEntry e = stack_.back();
  stack_.pop_back();
  KernelProfile& p = profiles_[e.index];
  p.calls += 1;
  p.time_s += std::chrono::duration<double>(std::chrono::steady_clock::now() - e.t0).count();
  if (counting_) {
    const double df = g_flop_tally.total() - e.flops0;
    p.flops += df;
    p.has_tallies = true;
    if (stack_.empty()) total_flops_ += df;
  }
}

void Profiler::add_bytes(double elems_read, double elems_written) {
  if (!counting_) return;
  const double br = 8.0 * elems_read;
  const double bw = 8.0 * elems_written;
  for (const OpenEntry& e : stack_) {
    profiles_[e.index].bytes_read += br;
    profiles_[e.index].bytes_written += bw;
    profiles_[e.index].has_tallies = true;
  }
  total_bytes_ += br + bw;
}

void Profiler::write_report_csv(std::ostream& os, double norm_time_s,
                                const std::string& region_prefix) const {
  char buf[512];
  os << "region,calls,time_s,time_normalized,flops,bytes,intensity\n";
  for (const KernelProfile& p : profiles_) {
    const double tn = norm_time_s > 0.0 ? p.time_s / norm_time_s : 0.0;
    if (p.has_tallies) {
      std::snprintf(buf, sizeof(buf), "%s%s,%ld,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    region_prefix.c_str(), p.name.c_str(), p.calls, p.time_s, tn, p.flops,
                    p.bytes(), p.intensity());
    } else {
      std::snprintf(buf, sizeof(buf), "%s%s,%ld,%.17g,%.17g,,,\n", region_prefix.c_str(),
                    p.name.c_str(), p.calls, p.time_s, tn);
    }
    os << buf;
  }
}

} // namespace pmhd
