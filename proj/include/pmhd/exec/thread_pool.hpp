//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file thread_pool.hpp
//  \brief persistent worker pool used by par_for / par_reduce
//
//  Scheduling is intentionally dumb: a dispatch hands every worker its fixed id
//  and blocks until all of them return. All chunking decisions live in the
//  dispatch layer so that work assignment is a pure function of
//  (policy, bounds, worker count) — the reproducibility contract depends on it.

#ifndef PMHD_EXEC_THREAD_POOL_HPP_
#define PMHD_EXEC_THREAD_POOL_HPP_

#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pmhd {

class ThreadPool {
 public:
  static ThreadPool& global();

  //! Run job(w) for w in [0, nworkers); the calling thread executes w = 0.
  //! Returns after every worker has finished (synchronization point).
  void run(int nworkers, const std::function<void(int)>& job);

  ~ThreadPool();
  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

 private:
  ThreadPool() = default;
  void ensure_threads(int n); // pool threads beyond the caller
  void worker_loop(int id);

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable cv_start_;
  std::condition_variable cv_done_;
  const std::function<void(int)>* job_ = nullptr;
  long generation_ = 0;
  int active_ = 0;    // pool threads participating in the current generation
  int remaining_ = 0; // pool threads that have not finished it yet
  bool shutdown_ = false;
};

} // namespace pmhd

#endif // PMHD_EXEC_THREAD_POOL_HPP_
