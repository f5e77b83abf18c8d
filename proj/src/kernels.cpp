#include "normsearch/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "normsearch/error.hpp"

namespace normsearch {

namespace {

bool contains(const std::vector<Integer>& sorted, const Integer& v) {
  return std::binary_search(sorted.begin(), sorted.end(), abs(v));
}

std::vector<Rational> values_of(const std::vector<SUnit>& entries) {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const SUnit& u : entries) out.push_back(u.value);
  return out;
}

// Builds the hit for a multiset whose sum is already known to be a target.
void record(std::vector<const SUnit*> picked, const Integer& sum, const CoordinateIndex& index,
            SUnitKernelResult& out) {
  std::vector<SUnit> entries;
  entries.reserve(picked.size());
  for (const SUnit* u : picked) entries.push_back(*u);
  std::sort(entries.begin(), entries.end(), [](const SUnit& a, const SUnit& b) { return a.value < b.value; });
  const std::vector<Rational> vals = values_of(entries);
  SubsumCertificate cert = subsums_nonvanishing(vals);
  if (!cert.nonvanishing) {
    ++out.rejected_vanishing;
    return;
  }
  SUnitHit h;
  h.entries = std::move(entries);
  h.sum = sum;
  h.in_x1 = index.in_x1(sum);
  h.in_x2 = index.in_x2(sum);
  h.certificate = std::move(cert);
  out.hits.push_back(std::move(h));
}

void merge_into(SUnitKernelResult& dst, SUnitKernelResult&& src) {
  dst.rejected_vanishing += src.rejected_vanishing;
  std::move(src.hits.begin(), src.hits.end(), std::back_inserter(dst.hits));
}

}  // namespace

CoordinateIndex::CoordinateIndex(const NormFormProblem& p, const Integer& bound, TrivialSolutions trivial)
    : x1_(coordinate_set(p, Coordinate::first, bound, trivial)),
      x2_(coordinate_set(p, Coordinate::second, bound, trivial)),
      bound_(bound) {
  for (const auto* set : {&x1_, &x2_}) {
    for (const Integer& v : *set) {
      targets_.push_back(v);
      if (v != 0) targets_.push_back(-v);
    }
  }
  std::sort(targets_.begin(), targets_.end());
  targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());
}

bool CoordinateIndex::in_x1(const Integer& v) const { return contains(x1_, v); }

bool CoordinateIndex::in_x2(const Integer& v) const { return contains(x2_, v); }

bool operator<(const PairHit& a, const PairHit& b) {
  if (a.n1 != b.n1) return a.n1 < b.n1;
  return a.n2 < b.n2;
}

bool operator==(const SUnitHit& a, const SUnitHit& b) {
  if (a.sum != b.sum || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].value != b.entries[i].value) return false;
  }
  return true;
}

bool operator<(const SUnitHit& a, const SUnitHit& b) {
  if (a.sum != b.sum) return a.sum < b.sum;
  return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
                                      [](const SUnit& x, const SUnit& y) { return x.value < y.value; });
}

int default_shards() {
  if (const char* env = std::getenv("NORMSEARCH_SHARDS"); env != nullptr && *env != '\0') {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("NORMSEARCH_SHARDS: expected a positive integer, got '") + env + "'");
  }
  return omp_get_max_threads();
}

namespace kernels {

std::vector<PairHit> pair_sums_serial(std::span<const Integer> terms, const CoordinateIndex& index) {
  std::vector<PairHit> hits;
  const auto n = static_cast<long>(terms.size());
  Integer sum;
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      sum = terms[i] + terms[j];
      const bool a = index.in_x1(sum);
      const bool b = index.in_x2(sum);
      if (a || b) hits.push_back(PairHit{i, j, sum, a, b});
    }
  }
  return hits;
}

std::vector<PairHit> pair_sums_parallel(std::span<const Integer> terms, const CoordinateIndex& index, int shards) {
  const auto n = static_cast<long>(terms.size());
  std::vector<std::vector<PairHit>> local(static_cast<std::size_t>(std::max(shards, 1)));
#pragma omp parallel num_threads(std::max(shards, 1))
  {
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
    Integer sum;
#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      for (long j = i; j < n; ++j) {
        sum = terms[i] + terms[j];
        const bool a = index.in_x1(sum);
        const bool b = index.in_x2(sum);
        if (a || b) mine.push_back(PairHit{i, j, sum, a, b});
      }
    }
  }
  std::vector<PairHit> hits;
  for (auto& v : local) std::move(v.begin(), v.end(), std::back_inserter(hits));
  std::sort(hits.begin(), hits.end());
  return hits;
}

SUnitKernelResult sunit_sums_serial(std::span<const SUnit> units, int t, const CoordinateIndex& index) {
  if (t < 1) throw InvalidArgument("tuple size t must be >= 1");
  SUnitKernelResult out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  const std::size_t n = units.size();
  if (n == 0) return out;
  // Non-decreasing index tuples enumerate multisets exactly once.
  for (;;) {
    Rational sum = 0;
    for (std::size_t k : idx) sum += units[k].value;
    if (sum.get_den() == 1 && (index.in_x1(sum.get_num()) || index.in_x2(sum.get_num()))) {
      std::vector<const SUnit*> picked;
      for (std::size_t k : idx) picked.push_back(&units[k]);
      record(std::move(picked), sum.get_num(), index, out);
    }
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < idx.size(); ++k) idx[k] = idx[pos - 1];
  }
  std::sort(out.hits.begin(), out.hits.end());
  return out;
}

SUnitKernelResult sunit_sums_parallel(std::span<const SUnit> units, int t, const CoordinateIndex& index,
                                      int shards) {
  if (t < 1) throw InvalidArgument("tuple size t must be >= 1");
  const std::size_t n = units.size();
  SUnitKernelResult out;
  if (n == 0) return out;

  // value -> position, for solving the last entry.
  std::vector<std::pair<Rational, std::size_t>> by_value;
  by_value.reserve(n);
  for (std::size_t i = 0; i < n; ++i) by_value.emplace_back(units[i].value, i);
  std::sort(by_value.begin(), by_value.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto position_of = [&](const Rational& v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(by_value.begin(), by_value.end(), v,
                               [](const auto& e, const Rational& x) { return e.first < x; });
    if (it == by_value.end() || it->first != v) return std::nullopt;
    return it->second;
  };

  const auto& targets = index.signed_targets();
  const int threads = std::max(shards, 1);
  std::vector<SUnitKernelResult> local(static_cast<std::size_t>(threads));
  const auto lead_count = static_cast<long>(n);

#pragma omp parallel num_threads(threads)
  {
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<std::size_t> idx(static_cast<std::size_t>(t));
#pragma omp for schedule(dynamic, 1)
    for (long lead = 0; lead < lead_count; ++lead) {
      const auto first = static_cast<std::size_t>(lead);
      if (t == 1) {
        const Rational& v = units[first].value;
        if (v.get_den() == 1 && (index.in_x1(v.get_num()) || index.in_x2(v.get_num()))) {
          record({&units[first]}, v.get_num(), index, mine);
        }
        continue;
      }
      // idx[0] = lead; idx[1..t-2] enumerated; idx[t-1] solved.
      const std::size_t middle = static_cast<std::size_t>(t) - 2;
      std::fill(idx.begin(), idx.end(), first);
      for (;;) {
        Rational partial = 0;
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) partial += units[idx[k]].value;
        const std::size_t floor_idx = idx[idx.size() - 2];
        for (const Integer& target : targets) {
          const auto last = position_of(Rational(target) - partial);
          if (!last || *last < floor_idx) continue;
          std::vector<const SUnit*> picked;
          for (std::size_t k = 0; k + 1 < idx.size(); ++k) picked.push_back(&units[idx[k]]);
          picked.push_back(&units[*last]);
          record(std::move(picked), target, index, mine);
        }
        if (middle == 0) break;
        // Advance idx[1..middle] as a non-decreasing tuple with entries >= lead.
        std::size_t pos = middle + 1;
        while (pos > 1 && idx[pos - 1] == n - 1) --pos;
        if (pos == 1) break;
        ++idx[pos - 1];
        for (std::size_t k = pos; k <= middle; ++k) idx[k] = idx[pos - 1];
      }
    }
  }
  for (auto& r : local) merge_into(out, std::move(r));
  std::sort(out.hits.begin(), out.hits.end());
  return out;
}

}  // namespace kernels

}  // namespace normsearch
