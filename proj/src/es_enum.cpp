#include "evenum/es_enum.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "evenum/order_enum.hpp"

namespace evenum {

void forEachEventStructure(std::size_t n, const EventStructureVisitor& visit, const ConflictOptions& options) {
  forEachPosetMatrix(n, [&](const BoolMatrix& m) {
    const Rel order = matrixToRel(m);
    for (const Rel& c : allowedConflicts(order, options)) visit(EventStructure{order, c});
  });
}

std::vector<EventStructure> enumerateEventStructures(std::size_t n, const ConflictOptions& options) {
  std::vector<EventStructure> out;
  forEachEventStructure(n, [&](const EventStructure& es) { out.push_back(es); }, options);
  return out;
}

std::uint64_t countEventStructures(std::size_t n, const CountOptions& options) {
  const std::vector<Rel> posets = enumeratePosets(n);
  const std::uint64_t total = posets.size();

  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::uint64_t>(total, 1)));

  constexpr std::uint64_t kChunk = 1024;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progressMutex;

  auto work = [&]() -> std::uint64_t {
    std::uint64_t sum = 0;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) sum += countAllowedConflicts(posets[i], options.conflicts);
      const std::uint64_t finished = done.fetch_add(end - begin) + (end - begin);
      if (options.progress) {
        std::lock_guard lock(progressMutex);
        options.progress(finished, total);
      }
    }
    return sum;
  };

  if (workers == 1) return work();

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { partial[w] = work(); });
  }
  for (auto& t : threads) t.join();

  std::uint64_t sum = 0;
  for (std::uint64_t s : partial) sum += s;
  return sum;
}

CountTable countsUpTo(std::size_t maxN, const CountOptions& options) {
  CountTable table;
  for (std::size_t n = 0; n <= maxN; ++n) {
    table.push_back(CountRow{n, countPreorders(n), countPosets(n), countEventStructures(n, options)});
  }
  return table;
}

}  // namespace evenum
