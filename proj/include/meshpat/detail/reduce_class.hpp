#pragma once

// Parallel enumeration of a permutation class. Included from oracle.hpp.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace meshpat::detail {

/// A set of permutations sharing fixed (position, value) pairs; the free
/// values are placed on the free positions in every possible order.
struct Frame {
  std::vector<int> word;            // fixed entries filled in, free entries 0
  std::vector<int> free_positions;  // 0-based, ascending
  std::vector<int> free_values;     // ascending
};

struct Chunk {
  std::size_t frame = 0;
  std::uint64_t lo = 0;  // lexicographic rank range of the free arrangement
  std::uint64_t hi = 0;
};

std::vector<Frame> class_frames(int n, const PermClass& cls);
std::vector<Chunk> split_frames(const std::vector<Frame>& frames, unsigned partitions);
/// The rank-th lexicographic arrangement of the ascending values.
void unrank(std::vector<int>& values, std::uint64_t rank);
unsigned resolve_threads(unsigned requested);
void check_cap(int n, const PermClass& cls, int cap);

}  // namespace meshpat::detail

namespace meshpat {

template <class Acc>
Acc reduce_class(int n, const PermClass& cls, const OracleOptions& opts, const std::function<Acc()>& make,
                 const std::function<void(Acc&, std::span<const int>)>& visit,
                 const std::function<void(Acc&, Acc&&)>& merge) {
  detail::check_cap(n, cls, opts.cap);
  const auto frames = detail::class_frames(n, cls);
  const unsigned threads = detail::resolve_threads(opts.threads);
  const unsigned partitions = opts.partitions != 0 ? opts.partitions : 4 * threads;
  const auto chunks = detail::split_frames(frames, partitions);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks.size())));

  std::vector<Acc> accs;
  accs.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) accs.push_back(make());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&](unsigned id) {
    try {
      std::vector<int> word;
      std::vector<int> arrangement;
      for (std::size_t c = next++; c < chunks.size(); c = next++) {
        const auto& chunk = chunks[c];
        const auto& frame = frames[chunk.frame];
        word = frame.word;
        arrangement = frame.free_values;
        detail::unrank(arrangement, chunk.lo);
        for (std::uint64_t r = chunk.lo; r < chunk.hi; ++r) {
          for (std::size_t k = 0; k < arrangement.size(); ++k) {
            word[static_cast<std::size_t>(frame.free_positions[k])] = arrangement[k];
          }
          visit(accs[id], std::span<const int>(word));
          std::next_permutation(arrangement.begin(), arrangement.end());
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Acc total = std::move(accs[0]);
  for (unsigned w = 1; w < workers; ++w) merge(total, std::move(accs[w]));
  return total;
}

}  // namespace meshpat
