//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file defs.hpp
//  \brief global type aliases, variable indices, and error types

#ifndef PMHD_DEFS_HPP_
#define PMHD_DEFS_HPP_

#include <stdexcept>
#include <string>

namespace pmhd {

using Real = double;

// Conserved variable indices. The cell-centered magnetic field components are
// carried in the conserved array so that ghost-cell exchange moves all eight
// variables in one pass; they are owned by the face fields and refreshed via
// face_to_center_b, never flux-updated.
enum ConsIndex : int { IDN = 0, IM1 = 1, IM2 = 2, IM3 = 3, IEN = 4, IB1 = 5, IB2 = 6, IB3 = 7 };

// Primitive variable indices (IDN and IB1..IB3 shared with ConsIndex).
enum PrimIndex : int { IV1 = 1, IV2 = 2, IV3 = 3, IPR = 4 };

inline constexpr int NCONS = 8;  // variables in the field arrays
inline constexpr int NHYDRO = 5; // flux-divergence-updated variables
inline constexpr int NWAVE = 7;  // size of the 1-D MHD eigensystem (normal B is a parameter)

enum class Axis : int { X1 = 0, X2 = 1, X3 = 2 };

//----------------------------------------------------------------------------------------
// Error types

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

class BufferError : public std::runtime_error {
 public:
  explicit BufferError(const std::string& msg) : std::runtime_error("buffer error: " + msg) {}
};

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error("input error: " + msg) {}
};

//! Raised when a conserved state yields non-positive density/pressure.
//! Carries the global cell coordinates and the solver stage that produced it.
class UnphysicalStateError : public std::runtime_error {
 public:
  UnphysicalStateError(const std::string& stage, int k, int j, int i)
      : std::runtime_error("unphysical state in stage '" + stage + "' at cell (k=" +
                           std::to_string(k) + ", j=" + std::to_string(j) + ", i=" +
                           std::to_string(i) + ")"),
        stage_tag(stage), kk(k), jj(j), ii(i) {}
  std::string stage_tag;
  int kk, jj, ii;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg),
        line_number(line) {}
  int line_number;
};

class UnsupportedKernelError : public std::runtime_error {
 public:
  explicit UnsupportedKernelError(const std::string& id)
      : std::runtime_error("kernel '" + id + "' is not instrumented for counting") {}
};

} // namespace pmhd

#endif // PMHD_DEFS_HPP_
