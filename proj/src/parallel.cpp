#include "pcone/parallel.hpp"

#include <atomic>
#include <thread>

namespace pcone {

namespace {

constexpr std::size_t kChunk = 8192;

int& thread_count_ref() {
  static int n = 1;
  return n;
}

template <typename ChunkFn>
void run_chunks(std::size_t n_chunks, ChunkFn&& fn) {
  int workers = thread_count();
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) break;
      fn(c);
    }
  };
  std::vector<std::thread> pool;
  int spawn = workers - 1;
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace

void set_thread_count(int n) { thread_count_ref() = n < 1 ? 1 : n; }

int thread_count() { return thread_count_ref(); }

double chunked_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
  if (n == 0) return 0.0;
  std::size_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(n_chunks, 0.0);
  run_chunks(n_chunks, [&](std::size_t c) {
    std::size_t lo = c * kChunk;
    std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[c] = s;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

std::vector<double> chunked_accumulate(
    std::size_t n, std::size_t k,
    const std::function<void(std::size_t, std::vector<double>&)>& body) {
  std::vector<double> out(k, 0.0);
  if (n == 0) return out;
  std::size_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(n_chunks);
  run_chunks(n_chunks, [&](std::size_t c) {
    std::size_t lo = c * kChunk;
    std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    std::vector<double> local(k, 0.0);
    for (std::size_t i = lo; i < hi; ++i) body(i, local);
    partial[c] = std::move(local);
  });
  for (std::size_t c = 0; c < n_chunks; ++c)
    for (std::size_t j = 0; j < k; ++j) out[j] += partial[c][j];
  return out;
}

}  // namespace pcone
