/**
 * @file checks.hpp
 * @brief Exhaustive exact axiom checkers.
 *
 * Each checker returns a CheckReport with one verdict per axiom family.  A
 * failed family carries the first failing basis tuple in lexicographic
 * order, so results do not depend on the thread count.
 */
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dequiv/core/structures.hpp"

namespace dequiv::core {

struct Witness {
  std::string axiom;
  std::vector<int> tuple;   // basis indices
  std::string coordinate;   // where the two sides differ, e.g. "e3 (x) e1"
  CycScalar lhs;
  CycScalar rhs;

  std::string describe() const;
};

/// Raised when a construction's input or output violates an axiom.
class AxiomFailure : public std::runtime_error {
 public:
  explicit AxiomFailure(Witness w) : std::runtime_error(w.describe()), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

struct AxiomVerdict {
  std::string axiom;
  bool passed = true;
  std::uint64_t tuples = 0;  // number of basis tuples examined
  double seconds = 0;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::vector<AxiomVerdict> verdicts;

  bool ok() const;
  /// First failing verdict's witness, if any.
  const Witness* witness() const;
  const AxiomVerdict* find(const std::string& axiom) const;
  void append(const CheckReport& other);
};

struct CheckOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  /// When set, the pentagon runs only on these quadruples instead of all d^4.
  std::optional<std::vector<std::array<int, 4>>> pentagon_sample;
};

unsigned resolve_threads(unsigned requested);

/// Runs check(i) for i in [0, n) across threads and returns the failure with
/// the smallest index. Indices above a known failure are skipped.
template <class Check>
std::optional<Witness> first_failure(std::int64_t n, unsigned threads, Check&& check) {
  threads = resolve_threads(threads);
  std::atomic<std::int64_t> best{n};
  std::atomic<std::int64_t> next{0};
  std::mutex mu;
  std::optional<Witness> found;
  std::int64_t found_at = n;
  const std::int64_t chunk = std::max<std::int64_t>(1, n / (static_cast<std::int64_t>(threads) * 64));
  auto worker = [&] {
    for (;;) {
      const std::int64_t start = next.fetch_add(chunk);
      if (start >= n || start >= best.load()) return;
      const std::int64_t stop = std::min(n, start + chunk);
      for (std::int64_t i = start; i < stop && i < best.load(); ++i) {
        if (auto w = check(i)) {
          std::lock_guard lock(mu);
          if (i < found_at) {
            found_at = i;
            found = std::move(w);
            std::int64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
          }
          break;
        }
      }
    }
  };
  if (threads <= 1 || n < 64) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return found;
}

CheckReport check_coassoc(const Coalgebra& c, const CheckOptions& opt = {});
/// Families: coassoc, counit, assoc, unit, bialg, antipode.
CheckReport check_hopf(const HopfAlgebra& h, const CheckOptions& opt = {});
/// Families: coassoc, counit, coalg-map, unit, normalized, associator-invertible,
/// quasi-assoc, pentagon. Quasi-associativity is checked in the left-comodule
/// form omega(h1,g1,k1) h2(g2k2) = (h1g1)k1 omega(h2,g2,k2), the one matching
/// the associator omega(u_-1, v_-1, w_-1) u_0 (x) v_0 (x) w_0 and the pentagon.
CheckReport check_coquasi(const CoquasiBialgebra& q, const CheckOptions& opt = {});
/// Families: antipode-alpha, antipode-beta, antipode-omega.
CheckReport check_quasi_antipode(const CoquasiBialgebra& q, const CheckOptions& opt = {});

/// Delta(x) as a sparse vector over the basis pairs (index a*dim+b).
SparseVector coproduct_of(const Coalgebra& c, const SparseVector& x);

}  // namespace dequiv::core
