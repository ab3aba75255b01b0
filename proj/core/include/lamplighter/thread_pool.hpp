#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lamplighter {

/// Fixed-size worker pool running one indexed batch at a time. With one
/// thread the batch runs inline on the caller.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned size() const { return size_; }

  /// Calls body(task) for every task in [0, tasks) and waits for all of them.
  /// The first exception thrown by a task is rethrown here.
  void run(std::size_t tasks, const std::function<void(std::size_t)>& body);

 private:
  void worker_loop();

  unsigned size_;
  std::vector<std::jthread> workers_;
  std::mutex mutex_;
  std::condition_variable work_ready_;
  std::condition_variable work_done_;
  const std::function<void(std::size_t)>* body_ = nullptr;
  std::size_t tasks_ = 0;
  std::size_t next_ = 0;
  std::size_t finished_ = 0;
  std::size_t generation_ = 0;
  bool stopping_ = false;
  std::exception_ptr error_;
};

/// Splits [0, count) into fixed-size shards, maps each shard independently
/// and folds the shard results in shard order. The fold order does not
/// depend on the number of threads.
template <class T, class MapShard, class Fold>
T reduce_shards(ThreadPool* pool, std::size_t count, std::size_t shard_size, T init,
                MapShard map_shard, Fold fold) {
  if (count == 0) return init;
  const std::size_t shards = (count + shard_size - 1) / shard_size;
  if (pool == nullptr || pool->size() <= 1 || shards == 1) {
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t begin = s * shard_size;
      const std::size_t end = begin + shard_size < count ? begin + shard_size : count;
      init = fold(std::move(init), map_shard(begin, end));
    }
    return init;
  }
  std::vector<T> partial(shards);
  pool->run(shards, [&](std::size_t s) {
    const std::size_t begin = s * shard_size;
    const std::size_t end = begin + shard_size < count ? begin + shard_size : count;
    partial[s] = map_shard(begin, end);
  });
  for (auto& p : partial) init = fold(std::move(init), std::move(p));
  return init;
}

}  // namespace lamplighter
