//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file counting.hpp
//  \brief operation-counting scalar and analytic kernel tallies
//
//  CountingScalar wraps a double and bumps a global tally on every arithmetic
//  operation while producing bit-identical values, so a solver instantiated on
//  it yields the same fields as a plain run plus an exact flop count.
//  Multiply-and-add sequences count as two operations, matching the convention
//  of counting a fused multiply-add as two FLOP (-ffp-contract=off keeps the
//  compiled arithmetic identical between instantiations).
//
//  Bytes are modeled analytically: every kernel is assumed to stream its input
//  and output arrays through main memory once, so bytes = 8 x (elements read +
//  elements written). The tally is not thread-safe; counting runs dispatch
//  with a single worker.

#ifndef PMHD_EXEC_COUNTING_HPP_
#define PMHD_EXEC_COUNTING_HPP_

#include <cmath>
#include <string>

#include "pmhd/defs.hpp"
#include "pmhd/exec/loop.hpp"

namespace pmhd {

struct FlopCounts {
  double add = 0.0;  // additions and subtractions
  double mul = 0.0;
  double div = 0.0;
  double sqrt_n = 0.0;

  double total() const { return add + mul + div + sqrt_n; }
  void reset() { add = mul = div = sqrt_n = 0.0; }
};

inline FlopCounts g_flop_tally;

class CountingScalar {
 public:
  CountingScalar() = default;
  CountingScalar(double v) : v_(v) {} // NOLINT: implicit by design (literals in kernels)

  double value() const { return v_; }

  CountingScalar operator-() const { return CountingScalar(-v_); } // sign flip, not counted

  friend CountingScalar operator+(CountingScalar a, CountingScalar b) {
    g_flop_tally.add += 1.0;
    return CountingScalar(a.v_ + b.v_);
  }
  friend CountingScalar operator-(CountingScalar a, CountingScalar b) {
    g_flop_tally.add += 1.0;
    return CountingScalar(a.v_ - b.v_);
  }
  friend CountingScalar operator*(CountingScalar a, CountingScalar b) {
    g_flop_tally.mul += 1.0;
    return CountingScalar(a.v_ * b.v_);
  }
  friend CountingScalar operator/(CountingScalar a, CountingScalar b) {
    g_flop_tally.div += 1.0;
    return CountingScalar(a.v_ / b.v_);
  }

  CountingScalar& operator+=(CountingScalar o) { *this = *this + o; return *this; }
  CountingScalar& operator-=(CountingScalar o) { *this = *this - o; return *this; }
  CountingScalar& operator*=(CountingScalar o) { *this = *this * o; return *this; }
  CountingScalar& operator/=(CountingScalar o) { *this = *this / o; return *this; }

  // comparisons and sign/abs manipulation are not floating-point operations
  friend bool operator<(CountingScalar a, CountingScalar b) { return a.v_ < b.v_; }
  friend bool operator>(CountingScalar a, CountingScalar b) { return a.v_ > b.v_; }
  friend bool operator<=(CountingScalar a, CountingScalar b) { return a.v_ <= b.v_; }
  friend bool operator>=(CountingScalar a, CountingScalar b) { return a.v_ >= b.v_; }
  friend bool operator==(CountingScalar a, CountingScalar b) { return a.v_ == b.v_; }
  friend bool operator!=(CountingScalar a, CountingScalar b) { return a.v_ != b.v_; }

  friend CountingScalar sqrt(CountingScalar a) {
    g_flop_tally.sqrt_n += 1.0;
    return CountingScalar(std::sqrt(a.v_));
  }
  friend CountingScalar fabs(CountingScalar a) { return CountingScalar(std::fabs(a.v_)); }
  friend CountingScalar fmin(CountingScalar a, CountingScalar b) {
    return CountingScalar(std::fmin(a.v_, b.v_));
  }
  friend CountingScalar fmax(CountingScalar a, CountingScalar b) {
    return CountingScalar(std::fmax(a.v_, b.v_));
  }

 private:
  double v_ = 0.0;
};

//! Extract the underlying double from either scalar type.
inline double scalar_value(double v) { return v; }
inline double scalar_value(const CountingScalar& v) { return v.value(); }

//----------------------------------------------------------------------------------------
// Standalone instrumented-kernel tallies

struct OpCount {
  double flops = 0.0;
  double bytes = 0.0;
  double intensity = 0.0;     // flops/bytes; 0 with intensity_defined=false when bytes==0
  bool intensity_defined = false;
};

//! \fn count_kernel_ops
//  \brief run a registered kernel over bounds in counting mode and return its
//         flop/byte tallies. Throws UnsupportedKernelError for unknown ids.
//  Registered ids: "empty", "add", "eos_cons_to_prim", "plm", "riemann_roe",
//  "riemann_hlle".
OpCount count_kernel_ops(const std::string& kernel_id, const LoopBounds& bounds);

} // namespace pmhd

#endif // PMHD_EXEC_COUNTING_HPP_
