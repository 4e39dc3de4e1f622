//========================================================================================
// PMHD: a performance-portable structured-grid finite-volume MHD mini-app
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file thread_pool.cpp
//  \brief implementation of the persistent worker pool

#include "pmhd/exec/thread_pool.hpp"

namespace pmhd {

ThreadPool& ThreadPool::global() {
  static ThreadPool pool;
  return pool;
}

ThreadPool::~ThreadPool() {
  {
    std::unique_lock<std::mutex> lock(mutex_);
    shutdown_ = true;
  }
  cv_start_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::ensure_threads(int n) {
  while (static_cast<int>(threads_.size()) < n) {
    const int id = static_cast<int>(threads_.size()) + 1; // worker 0 is the caller
    threads_.emplace_back([this, id] { worker_loop(id); });
  }
}

void ThreadPool::worker_loop(int id) {
  long seen = 0;
  for (;;) {
    const std::function<void(int)>* job = nullptr;
    {
      std::unique_lock<std::mutex> lock(mutex_);
      cv_start_.wait(lock, [&] { return shutdown_ || generation_ != seen; });
      if (shutdown_) return;
      seen = generation_;
      if (id > active_) continue; // not part of this dispatch
      job = job_;
    }
    (*job)(id);
    {
      std::unique_lock<std::mutex> lock(mutex_);
      if (--remaining_ == 0) cv_done_.notify_all();
    }
  }
}

void ThreadPool::run(int nworkers, const std::function<void(int)>& job) {
  if (nworkers <= 1) { // serial fast path, no pool involvement
    job(0);
    return;
  }
  {
    std::unique_lock<std::mutex> lock(mutex_);
    ensure_threads(nworkers - 1);
    job_ = &job;
    active_ = nworkers - 1;
    remaining_ = nworkers - 1;
    ++generation_;
  }
  cv_start_.notify_all();
  job(0);
  {
    std::unique_lock<std::mutex> lock(mutex_);
    cv_done_.wait(lock, [&] { return remaining_ == 0; });
    job_ = nullptr;
  }
}

} // namespace pmhd
