#include "lamplighter/thread_pool.hpp"

namespace lamplighter {

ThreadPool::ThreadPool(unsigned threads) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  size_ = threads == 0 ? 1 : threads;
  if (size_ > 1) {
    workers_.reserve(size_);
    for (unsigned i = 0; i < size_; ++i) workers_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  work_ready_.notify_all();
  workers_.clear();
}

void ThreadPool::run(std::size_t tasks, const std::function<void(std::size_t)>& body) {
  if (tasks == 0) return;
  if (workers_.empty()) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::unique_lock lock(mutex_);
  body_ = &body;
  tasks_ = tasks;
  next_ = 0;
  finished_ = 0;
  error_ = nullptr;
  ++generation_;
  work_ready_.notify_all();
  work_done_.wait(lock, [this] { return finished_ == tasks_; });
  body_ = nullptr;
  if (error_) std::rethrow_exception(error_);
}

void ThreadPool::worker_loop() {
  std::size_t seen = 0;
  std::unique_lock lock(mutex_);
  for (;;) {
    work_ready_.wait(lock, [&] { return stopping_ || (generation_ != seen && next_ < tasks_); });
    if (stopping_) return;
    while (next_ < tasks_) {
      const std::size_t task = next_++;
      const auto* body = body_;
      lock.unlock();
      try {
        (*body)(task);
      } catch (...) {
        lock.lock();
        if (!error_) error_ = std::current_exception();
        lock.unlock();
      }
      lock.lock();
      if (++finished_ == tasks_) work_done_.notify_all();
    }
    seen = generation_;
  }
}

}  // namespace lamplighter
