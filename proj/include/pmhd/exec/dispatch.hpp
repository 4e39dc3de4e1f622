//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file dispatch.hpp
//  \brief par_for / par_reduce over the four loop patterns
//
//  Contract: a kernel body writes only to locations that are a function of its
//  own (k,j,i), so any iteration order and any worker split produces bitwise
//  identical arrays. Reductions fold per-worker partials in the policy's visit
//  order and then combine the partials in worker-id order, so the combination
//  tree is a pure function of (pattern, bounds, worker count) and repeated
//  runs are bit-identical. With one worker every pattern visits cells in
//  lexicographic (k,j,i) order, which makes the single-worker result equal to
//  a plain serial fold.

#ifndef PMHD_EXEC_DISPATCH_HPP_
#define PMHD_EXEC_DISPATCH_HPP_

#include <algorithm>
#include <vector>

#include "pmhd/exec/loop.hpp"
#include "pmhd/exec/thread_pool.hpp"

namespace pmhd {

namespace detail {

// Listing-1 shape: tight k/j loops, contiguous unit-stride inner i range.
template <typename F>
inline void visit_simd_nested(const LoopBounds& b, int workers, int w, F&& f) {
  long kb, ke;
  static_chunk(b.nk(), workers, w, kb, ke);
  for (long kk = kb; kk < ke; ++kk) {
    const int k = b.ks + static_cast<int>(kk);
    for (int j = b.js; j < b.je; ++j) {
      for (int i = b.is; i < b.ie; ++i) f(k, j, i);
    }
  }
}

// Listing-2 shape: parallel over the (k,j) plane, serial inner i.
template <typename F>
inline void visit_md_range(const LoopBounds& b, int workers, int w, F&& f) {
  long mb, me;
  static_chunk(static_cast<long>(b.nk()) * b.nj(), workers, w, mb, me);
  for (long m = mb; m < me; ++m) {
    const int k = b.ks + static_cast<int>(m / b.nj());
    const int j = b.js + static_cast<int>(m % b.nj());
    for (int i = b.is; i < b.ie; ++i) f(k, j, i);
  }
}

// Listing-3 shape: parallel over the collapsed range with explicit decoding.
template <typename F>
inline void visit_flat_1d(const LoopBounds& b, int workers, int w, F&& f) {
  long fb, fe;
  static_chunk(b.cells(), workers, w, fb, fe);
  for (long idx = fb; idx < fe; ++idx) {
    int k, j, i;
    decode_flat_index(idx, b.nj(), b.ni(), k, j, i);
    f(b.ks + k, b.js + j, b.is + i);
  }
}

// Listing-4 shape: teams own contiguous runs of k-tiles, members split j,
// inner i stays a vectorizable range. Workers beyond nteams*team_size idle.
template <typename F>
inline void visit_tiled_team(const LoopBounds& b, const LoopPolicy& p, int w, F&& f) {
  const int team_size = std::min(p.team_size, std::max(1, p.workers));
  const int nteams = std::max(1, p.workers / team_size);
  const int team = w / team_size;
  const int member = w % team_size;
  if (team >= nteams) return;
  const int tile_k = std::min(p.tile_k, std::max(1, b.nk()));
  const long ntiles = (b.nk() + tile_k - 1) / tile_k;
  long tb, te;
  static_chunk(ntiles, nteams, team, tb, te);
  long jb, je;
  static_chunk(b.nj(), team_size, member, jb, je);
  for (long t = tb; t < te; ++t) {
    const int k0 = b.ks + static_cast<int>(t) * tile_k;
    const int k1 = std::min(b.ke, k0 + tile_k);
    for (int k = k0; k < k1; ++k) {
      for (long jj = jb; jj < je; ++jj) {
        const int j = b.js + static_cast<int>(jj);
        for (int i = b.is; i < b.ie; ++i) f(k, j, i);
      }
    }
  }
}

template <typename F>
inline void visit(const LoopPolicy& p, const LoopBounds& b, int w, F&& f) {
  switch (p.pattern) {
    case LoopPattern::SimdNested: visit_simd_nested(b, p.workers, w, f); break;
    case LoopPattern::MDRange:    visit_md_range(b, p.workers, w, f); break;
    case LoopPattern::Flat1D:     visit_flat_1d(b, p.workers, w, f); break;
    case LoopPattern::TiledTeam:  visit_tiled_team(b, p, w, f); break;
  }
}

} // namespace detail

//! \fn par_for
//  \brief invoke body(k,j,i) exactly once per index in bounds; returns after
//         all writes are visible (synchronization point). Empty bounds: no-op.
template <typename Body>
inline void par_for(const LoopPolicy& policy, const LoopBounds& bounds, Body&& body) {
  if (bounds.empty()) return;
  if (policy.workers <= 1) {
    detail::visit(policy, bounds, 0, body);
    return;
  }
  ThreadPool::global().run(policy.workers,
                           [&](int w) { detail::visit(policy, bounds, w, body); });
}

//! \fn par_reduce
//  \brief fold body(k,j,i) with a deterministic fixed-shape combination tree.
//  combine must be associative and commutative with the given neutral identity.
template <typename T, typename Body, typename Combine>
inline T par_reduce(const LoopPolicy& policy, const LoopBounds& bounds, Body&& body,
                    Combine&& combine, T identity) {
  if (bounds.empty()) return identity;
  const int nw = std::max(1, policy.workers);
  std::vector<T> partial(nw, identity);
  auto work = [&](int w) {
    T acc = identity;
    detail::visit(policy, bounds, w,
                  [&](int k, int j, int i) { acc = combine(acc, body(k, j, i)); });
    partial[w] = acc;
  };
  if (nw == 1) {
    work(0);
  } else {
    ThreadPool::global().run(nw, work);
  }
  T result = identity;
  for (int w = 0; w < nw; ++w) result = combine(result, partial[w]);
  return result;
}

//! Plain nested serial loop, independent of the dispatch machinery.
//! Used as the reference path when checking that a one-worker dispatch is
//! bitwise equal to serial execution, and by test oracles.
template <typename F>
inline void serial_for(const LoopBounds& b, F&& f) {
  for (int k = b.ks; k < b.ke; ++k)
    for (int j = b.js; j < b.je; ++j)
      for (int i = b.is; i < b.ie; ++i) f(k, j, i);
}

} // namespace pmhd

#endif // PMHD_EXEC_DISPATCH_HPP_
