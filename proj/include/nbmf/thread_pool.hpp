#pragma once

#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nbmf {

/// Number of worker threads to use: NBMF_THREADS env var, else hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("NBMF_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Persistent pool running index-addressed jobs. Jobs within one parallel_for
/// call must be independent; the call returns after all of them finish.
class ThreadPool {
public:
  explicit ThreadPool(int n_threads = thread_count()) {
    if (n_threads < 1) n_threads = 1;
    workers_.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lk(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int size() const { return static_cast<int>(workers_.size()); }

  /// Runs fn(i) for i in [0, n_jobs), distributed over the pool; blocks until done.
  /// The calling thread participates, so the pool also works with 0 pending workers.
  void parallel_for(int n_jobs, const std::function<void(int)>& fn) {
    if (n_jobs <= 0) return;
    if (n_jobs == 1 || workers_.empty()) {
      for (int i = 0; i < n_jobs; ++i) fn(i);
      return;
    }
    {
      std::lock_guard<std::mutex> lk(mu_);
      job_ = &fn;
      next_ = 0;
      pending_ = n_jobs;
      total_ = n_jobs;
    }
    cv_.notify_all();
    run_jobs();
    std::unique_lock<std::mutex> lk(mu_);
    done_cv_.wait(lk, [this] { return pending_ == 0; });
    job_ = nullptr;
  }

private:
  void run_jobs() {
    while (true) {
      int i;
      {
        std::lock_guard<std::mutex> lk(mu_);
        if (job_ == nullptr || next_ >= total_) return;
        i = next_++;
      }
      (*job_)(i);
      std::lock_guard<std::mutex> lk(mu_);
      if (--pending_ == 0) done_cv_.notify_all();
    }
  }

  void worker_loop() {
    while (true) {
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [this] { return stop_ || (job_ != nullptr && next_ < total_); });
        if (stop_) return;
      }
      run_jobs();
    }
  }

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_, done_cv_;
  const std::function<void(int)>* job_ = nullptr;
  int next_ = 0, total_ = 0, pending_ = 0;
  bool stop_ = false;
};

/// Shared process-wide pool.
inline ThreadPool& global_pool() {
  static ThreadPool pool;
  return pool;
}

}  // namespace nbmf
