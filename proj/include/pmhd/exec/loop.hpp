//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file loop.hpp
//  \brief loop bounds, execution-policy descriptor, and flat-index decoding

#ifndef PMHD_EXEC_LOOP_HPP_
#define PMHD_EXEC_LOOP_HPP_

#include <string>

#include "pmhd/defs.hpp"

namespace pmhd {

//! Inclusive-exclusive index ranges of a triple cell loop: k in [ks,ke), etc.
struct LoopBounds {
  int ks = 0, ke = 0, js = 0, je = 0, is = 0, ie = 0;

  int nk() const { return ke - ks; }
  int nj() const { return je - js; }
  int ni() const { return ie - is; }
  long cells() const { return static_cast<long>(nk()) * nj() * ni(); }
  bool empty() const { return nk() <= 0 || nj() <= 0 || ni() <= 0; }
};

//! The four parallel-loop execution patterns.
//!   SimdNested - tight serial k/j loops, inner i written to auto-vectorize
//!   MDRange    - workers split the collapsed (k,j) plane, serial inner i
//!   Flat1D     - workers split the fully collapsed k*j*i range, indices decoded
//!   TiledTeam  - teams own k-tiles, team members split j, vectorizable inner i
enum class LoopPattern { SimdNested, MDRange, Flat1D, TiledTeam };

struct LoopPolicy {
  LoopPattern pattern = LoopPattern::SimdNested;
  int workers = 1;
  // TiledTeam parameters: threads per team and the k-extent of one tile
  // (clamped to the loop bounds).
  int team_size = 2;
  int tile_k = 4;

  void validate() const {
    if (workers < 1) throw ConfigError("loop policy worker count must be >= 1");
    if (team_size < 1) throw ConfigError("loop policy team size must be >= 1");
    if (tile_k < 1) throw ConfigError("loop policy tile extent must be >= 1");
  }
};

LoopPattern loop_pattern_from_string(const std::string& name);
std::string to_string(LoopPattern p);

//! \fn decode_flat_index
//  \brief inverse of idx = k*(nj*ni) + j*ni + i for the collapsed 1-D range
inline void decode_flat_index(long idx, int nj, int ni, int& k, int& j, int& i) {
  const long nji = static_cast<long>(nj) * ni;
  k = static_cast<int>(idx / nji);
  j = static_cast<int>((idx - k * nji) / ni);
  i = static_cast<int>(idx - k * nji - static_cast<long>(j) * ni);
}

//! Contiguous static chunk c (of nchunks) of the range [0,n): returns [begin,end).
inline void static_chunk(long n, int nchunks, int c, long& begin, long& end) {
  const long chunk = (n + nchunks - 1) / nchunks;
  begin = chunk * c;
  end = begin + chunk;
  if (begin > n) begin = n;
  if (end > n) end = n;
}

} // namespace pmhd

#endif // PMHD_EXEC_LOOP_HPP_
