#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>

#include "gr1core/element_set.hpp"

namespace gr1core {

/// Memoized outcomes of a monotonic criterion. A query is answered positive
/// when a stored positive subset exists, negative when a stored negative
/// superset exists. Sets are kept sorted (element order) and bucketed by
/// size, so only candidate buckets of feasible size are searched: a larger
/// set cannot be a subset of a smaller one.
class MemoCache {
 public:
  enum class Answer { positive, negative, unknown };

  Answer query(const ElementSet& s) const;
  void store(const ElementSet& s, bool result);
  /// Seeds a known-positive set (e.g. a core found elsewhere).
  void add_positive(const ElementSet& s);

  std::size_t positive_count() const { return count(positives_); }
  std::size_t negative_count() const { return count(negatives_); }

 private:
  using Buckets = std::map<std::size_t, std::vector<ElementSet>>;

  static std::size_t count(const Buckets& b);

  Buckets positives_;
  Buckets negatives_;
};

struct CheckStats {
  std::uint64_t actual_checks = 0;
  std::uint64_t memo_hits = 0;
};

/// A monotonic subset criterion with a check counter. Copies share state,
/// so the counters aggregate across everything that holds the same
/// criterion. A criterion and its cache are meant to be confined to one
/// minimization run; independent runs use separate instances.
class Criterion {
 public:
  using CheckFn = std::function<bool(const ElementSet&)>;

  explicit Criterion(CheckFn fn);

  bool check(const ElementSet& s);

  const CheckStats& stats() const;
  MemoCache* cache();
  const MemoCache* cache() const;

 private:
  struct State;
  std::shared_ptr<State> state_;

  friend Criterion memoize(const Criterion& c);
};

/// Wraps a criterion with a fresh MemoCache; semantically identical, but
/// the actual-check counter only advances on cache misses.
Criterion memoize(const Criterion& c);

/// Delta debugging. Recursively partitions the ID-ordered set into n
/// contiguous parts (sizes differing by at most one, starting from n = 2),
/// first testing each part, then each complement (continuing with
/// max(n-1, 2)), doubling the granularity when neither helps, and stopping
/// once n reaches |E|. Requires check(E) to hold; returns a core.
ElementSet ddmin(const ElementSet& e, Criterion& check);

/// Divide-and-conquer core extraction: splits the set into contiguous
/// halves and minimizes each against the other, skipping a half entirely
/// when the accumulated background already satisfies the criterion.
/// Same contract as ddmin, different search order.
ElementSet quickxplain(const ElementSet& e, Criterion& check);

/// Scans elements in ID order and removes each iff the criterion holds for
/// the set without it.
ElementSet linear_min(const ElementSet& e, Criterion& check);

enum class MinAlg { ddmin, quickxplain, linear };

ElementSet minimize(MinAlg alg, const ElementSet& e, Criterion& check);

/// Minimization with a base: computes a locally minimal A' of A such that
/// base ∪ A' satisfies the criterion, by running `alg` on A with every
/// check(X) replaced by check(base ∪ X). Requires base and A disjoint and
/// check(base ∪ A) to hold.
ElementSet min_with_base(MinAlg alg, const ElementSet& e,
                         const ElementSet& base, const ElementSet& a,
                         Criterion& check);

/// Core validity: the result satisfies the criterion and no single-element
/// removal does.
bool validate_core(const ElementSet& result, Criterion& check);

}  // namespace gr1core
