//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file profiler.hpp
//  \brief named profiling regions with optional operation/byte tallies
//
//  Regions are entered from the dispatching thread (kernel bodies never touch
//  the profiler). Regions may nest and names need not be unique; nested time
//  and tallies count toward every open region, so self-times are derivable.

#ifndef PMHD_EXEC_PROFILER_HPP_
#define PMHD_EXEC_PROFILER_HPP_

#include <chrono>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace pmhd {

//! Per-region accumulated profile. Tallies are only meaningful after a
//! counting-mode run (has_tallies set).
struct KernelProfile {
  std::string name;
  long calls = 0;
  double time_s = 0.0;
  double flops = 0.0;
  double bytes_read = 0.0;
  double bytes_written = 0.0;
  bool has_tallies = false;

  double bytes() const { return bytes_read + bytes_written; }
  double intensity() const { return bytes() > 0.0 ? flops / bytes() : 0.0; }
};

class Profiler {
 public:
  static Profiler& global();

  void set_enabled(bool on) { enabled_ = on; }
  bool enabled() const { return enabled_; }

  void set_counting(bool on) { counting_ = on; }
  bool counting() const { return counting_; }

  void reset();

  //! Record streamed array traffic (in elements of 8 bytes) for all open
  //! regions. No-op unless counting mode is on.
  void add_bytes(double elems_read, double elems_written);

  int open_region(std::string_view name);
  void close_region();

  const std::vector<KernelProfile>& profiles() const { return profiles_; }
  //! Sum of flops over top-level (currently closed) regions since reset.
  double total_flops() const { return total_flops_; }
  double total_bytes() const { return total_bytes_; }

  //! Profile report CSV: region, calls, time_s, time_normalized, flops, bytes,
  //! intensity. time_normalized divides by norm_time_s (Fig.-3 style: caller
  //! passes the fastest Riemann-region time). Tally columns are left empty for
  //! regions without counting data.
  void write_report_csv(std::ostream& os, double norm_time_s,
                        const std::string& region_prefix = "") const;

 private:
  Profiler() = default;

  struct OpenEntry {
    int index;
    std::chrono::steady_clock::time_point t0;
    double flops0;
  };

  bool enabled_ = true;
  bool counting_ = false;
  std::vector<KernelProfile> profiles_; // insertion order
  std::unordered_map<std::string, int> index_;
  std::vector<OpenEntry> stack_;
  double total_flops_ = 0.0;
  double total_bytes_ = 0.0;
};

namespace detail {
struct RegionGuard {
  explicit RegionGuard(std::string_view name) { Profiler::global().open_region(name); }
  ~RegionGuard() { Profiler::global().close_region(); }
};
} // namespace detail

//! \fn with_region
//  \brief run thunk inside a named profiling region and return its result
template <typename F>
inline auto with_region(std::string_view name, F&& thunk) -> decltype(thunk()) {
  if (!Profiler::global().enabled()) return thunk();
  detail::RegionGuard guard(name);
  return thunk();
}

} // namespace pmhd

#endif // PMHD_EXEC_PROFILER_HPP_
