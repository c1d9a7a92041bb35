#include "gr1core/minimize.hpp"

#include <algorithm>

#include "gr1core/errors.hpp"

namespace gr1core {

MemoCache::Answer MemoCache::query(const ElementSet& s) const {
  // Positive subsets can only live in buckets of size <= |s|.
  for (auto it = positives_.begin();
       it != positives_.end() && it->first <= s.size(); ++it) {
    for (const ElementSet& p : it->second)
      if (p.subset_of(s)) return Answer::positive;
  }
  // Negative supersets can only live in buckets of size >= |s|.
  for (auto it = negatives_.lower_bound(s.size()); it != negatives_.end();
       ++it) {
    for (const ElementSet& n : it->second)
      if (s.subset_of(n)) return Answer::negative;
  }
  return Answer::unknown;
}

void MemoCache::store(const ElementSet& s, bool result) {
  (result ? positives_ : negatives_)[s.size()].push_back(s);
}

void MemoCache::add_positive(const ElementSet& s) {
  if (query(s) == Answer::positive) return;
  positives_[s.size()].push_back(s);
}

std::size_t MemoCache::count(const Buckets& b) {
  std::size_t n = 0;
  for (const auto& [size, sets] : b) n += sets.size();
  return n;
}

struct Criterion::State {
  CheckFn fn;
  CheckStats stats;
  std::unique_ptr<MemoCache> cache;
};

Criterion::Criterion(CheckFn fn) : state_(std::make_shared<State>()) {
  state_->fn = std::move(fn);
}

bool Criterion::check(const ElementSet& s) {
  if (state_->cache) {
    switch (state_->cache->query(s)) {
      case MemoCache::Answer::positive:
        ++state_->stats.memo_hits;
        return true;
      case MemoCache::Answer::negative:
        ++state_->stats.memo_hits;
        return false;
      case MemoCache::Answer::unknown:
        break;
    }
  }
  ++state_->stats.actual_checks;
  bool result = state_->fn(s);
  if (state_->cache) state_->cache->store(s, result);
  return result;
}

const CheckStats& Criterion::stats() const { return state_->stats; }

MemoCache* Criterion::cache() { return state_->cache.get(); }
const MemoCache* Criterion::cache() const { return state_->cache.get(); }

Criterion memoize(const Criterion& c) {
  Criterion out(c.state_->fn);
  out.state_->cache = std::make_unique<MemoCache>();
  return out;
}

namespace {

/// Splits the ID-ordered sequence into n contiguous chunks whose sizes
/// differ by at most one. Chunks beyond |E| come out empty.
std::vector<ElementSet> partition(const ElementSet& e, std::size_t n) {
  const auto& ids = e.ids();
  std::vector<ElementSet> parts;
  parts.reserve(n);
  const std::size_t q = ids.size() / n;
  const std::size_t r = ids.size() % n;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = q + (i < r ? 1 : 0);
    parts.emplace_back(
        std::vector<ElementId>(ids.begin() + pos, ids.begin() + pos + len));
    pos += len;
  }
  return parts;
}

ElementSet ddmin_rec(const ElementSet& e, std::size_t n, Criterion& check) {
  const std::vector<ElementSet> parts = partition(e, n);

  for (const ElementSet& part : parts) {
    if (part.empty() || part.size() == e.size()) continue;
    if (check.check(part)) return ddmin_rec(part, 2, check);
  }
  for (const ElementSet& part : parts) {
    if (part.empty() || part.size() == e.size()) continue;
    ElementSet complement = e.minus(part);
    if (check.check(complement))
      return ddmin_rec(complement, std::max<std::size_t>(n - 1, 2), check);
  }
  if (n >= e.size()) return e;
  return ddmin_rec(e, std::min(e.size(), 2 * n), check);
}

struct QuickXplain {
  Criterion& check;

  ElementSet run(const ElementSet& background, const ElementSet& remaining,
                 bool background_grew) {
    if (background_grew && check.check(background)) return {};
    if (remaining.size() == 1) return remaining;
    const auto& ids = remaining.ids();
    const std::size_t half = (ids.size() + 1) / 2;
    ElementSet first(std::vector<ElementId>(ids.begin(), ids.begin() + half));
    ElementSet second(std::vector<ElementId>(ids.begin() + half, ids.end()));

    ElementSet need2 = run(background.unioned(first), second, !first.empty());
    ElementSet need1 = run(background.unioned(need2), first, !need2.empty());
    return need1.unioned(need2);
  }
};

}  // namespace

ElementSet ddmin(const ElementSet& e, Criterion& check) {
  if (!check.check(e))
    throw PreconditionError("ddmin: criterion fails on the input set");
  if (e.empty()) return e;
  return ddmin_rec(e, 2, check);
}

ElementSet quickxplain(const ElementSet& e, Criterion& check) {
  if (!check.check(e))
    throw PreconditionError("quickxplain: criterion fails on the input set");
  if (e.empty()) return e;
  return QuickXplain{check}.run({}, e, false);
}

ElementSet linear_min(const ElementSet& e, Criterion& check) {
  if (!check.check(e))
    throw PreconditionError("linear_min: criterion fails on the input set");
  ElementSet kept = e;
  for (ElementId x : e) {
    ElementSet without = kept.minus(x);
    if (check.check(without)) kept = std::move(without);
  }
  return kept;
}

ElementSet minimize(MinAlg alg, const ElementSet& e, Criterion& check) {
  switch (alg) {
    case MinAlg::ddmin:
      return ddmin(e, check);
    case MinAlg::quickxplain:
      return quickxplain(e, check);
    default:
      return linear_min(e, check);
  }
}

ElementSet min_with_base(MinAlg alg, const ElementSet& e,
                         const ElementSet& base, const ElementSet& a,
                         Criterion& check) {
  (void)e;
  if (!base.intersect(a).empty())
    throw PreconditionError("min_with_base: base and A overlap");
  if (!check.check(base.unioned(a)))
    throw PreconditionError("min_with_base: criterion fails on base ∪ A");
  // When the base alone satisfies the criterion the only locally minimal
  // remainder is empty; in particular a base containing a core yields ∅.
  if (check.check(base)) return {};
  Criterion rebased([&base, &check](const ElementSet& x) mutable {
    return check.check(base.unioned(x));
  });
  return minimize(alg, a, rebased);
}

bool validate_core(const ElementSet& result, Criterion& check) {
  if (!check.check(result)) return false;
  for (ElementId x : result) {
    if (check.check(result.minus(x))) return false;
  }
  return true;
}

}  // namespace gr1core
