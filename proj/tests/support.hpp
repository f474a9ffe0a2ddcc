#pragma once

#include <cstdint>
#include <vector>

#include "horadam/recurrence.hpp"

namespace horadam::test {

inline RecurrenceParams params(long a, long b, long p, long q) {
  return RecurrenceParams(Integer(a), Integer(b), Integer(p), Integer(q));
}

inline RecurrenceParams fibonacci() { return params(0, 1, 1, 1); }
inline RecurrenceParams pell() { return params(0, 1, 2, 1); }
/// W_n = 2^n
inline RecurrenceParams geometric() { return params(1, 2, 2, 0); }

inline WeightedSelector selector(std::int64_t m, std::vector<long> s, std::vector<std::int64_t> l) {
  std::vector<Integer> weights(s.begin(), s.end());
  return WeightedSelector(m, std::move(weights), std::move(l));
}

inline WeightedSelector single(std::int64_t m = 1) { return selector(m, {1}, {0}); }

/// Plain loop independent of the library, for oracle comparisons.
inline std::vector<Integer> brute_sequence(long a, long b, long p, long q, std::size_t count) {
  std::vector<Integer> w{Integer(a), Integer(b)};
  while (w.size() < count) w.push_back(p * w[w.size() - 1] + q * w[w.size() - 2]);
  return w;
}

}  // namespace horadam::test
