#include "persuasion/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <string>
#include <thread>
#include <unordered_set>

#include "persuasion/error.hpp"

namespace persuasion {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_nanos(Clock::time_point start) {
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ns));
}

// hit/given >= p with given > 0, on integer measures.
class ThresholdTest {
 public:
  explicit ThresholdTest(const Rational& p) : num_(p.num()), den_(p.den()) {
    small_ = num_.fits_ulong_p() && den_.fits_ulong_p();
    if (small_) {
      num_small_ = num_.get_ui();
      den_small_ = den_.get_ui();
    }
  }

  bool operator()(std::uint64_t hit, std::uint64_t given) const {
    if (given == 0) return false;
    if (small_) {
      using u128 = unsigned __int128;
      return u128{hit} * den_small_ >= u128{given} * num_small_;
    }
    return (*this)(BigInt(static_cast<unsigned long>(hit)), BigInt(static_cast<unsigned long>(given)));
  }

  bool operator()(const BigInt& hit, const BigInt& given) const {
    if (given == 0) return false;
    return hit * den_ >= num_ * given;
  }

 private:
  BigInt num_, den_;
  bool small_ = false;
  std::uint64_t num_small_ = 0, den_small_ = 0;
};

Report report_from_mask(std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) idx.push_back(i);
  }
  return Report(std::move(idx));
}

// Shared, read-only view of the instance used by every Gray-code worker.
template <typename Acc>
struct GrayContext {
  std::vector<Acc> weight;
  std::vector<char> in_focal;
  std::vector<std::vector<std::uint32_t>> excluded;  // outcomes outside each fact
  ThresholdTest meets;
  bool stop_at_first;
};

struct RangeOutcome {
  std::optional<std::uint64_t> first_hit;
  SolverStats stats;
};

template <typename Acc>
RangeOutcome scan_range(const GrayContext<Acc>& ctx, std::uint64_t lo, std::uint64_t hi,
                        std::atomic<std::uint64_t>& best_hit) {
  RangeOutcome out;
  const std::size_t n_out = ctx.weight.size();
  std::vector<std::uint32_t> exclusion(n_out, 0);
  std::uint64_t mask = gray_code(lo);
  for (std::size_t f = 0; f < ctx.excluded.size(); ++f) {
    if ((mask >> f) & 1u) {
      for (auto w : ctx.excluded[f]) ++exclusion[w];
      ++out.stats.intersections_computed;
    }
  }
  Acc given{0}, hit{0};
  for (std::size_t w = 0; w < n_out; ++w) {
    if (exclusion[w] == 0) {
      given += ctx.weight[w];
      if (ctx.in_focal[w]) hit += ctx.weight[w];
    }
  }

  for (std::uint64_t t = lo;; ++t) {
    ++out.stats.nodes_explored;
    if (!out.first_hit && ctx.meets(hit, given)) {
      out.first_hit = t;
      std::uint64_t cur = best_hit.load();
      while (t < cur && !best_hit.compare_exchange_weak(cur, t)) {
      }
      if (ctx.stop_at_first) break;
    }
    if (t + 1 == hi) break;
    if (ctx.stop_at_first && best_hit.load(std::memory_order_relaxed) < t) break;

    const auto bit = static_cast<std::size_t>(std::countr_zero(t + 1));
    const auto& outside = ctx.excluded[bit];
    if ((mask >> bit) & 1u) {
      for (auto w : outside) {
        if (--exclusion[w] == 0) {
          given += ctx.weight[w];
          if (ctx.in_focal[w]) hit += ctx.weight[w];
        }
      }
    } else {
      for (auto w : outside) {
        if (exclusion[w]++ == 0) {
          given -= ctx.weight[w];
          if (ctx.in_focal[w]) hit -= ctx.weight[w];
        }
      }
    }
    mask ^= std::uint64_t{1} << bit;
    ++out.stats.intersections_computed;
  }
  return out;
}

template <typename Acc>
SolveResult run_gray(const PersuasionInstance& inst, std::vector<Acc> weight, const BruteForceOptions& opt) {
  const std::size_t n_facts = inst.num_facts();
  GrayContext<Acc> ctx{std::move(weight), {}, {}, ThresholdTest(inst.threshold), opt.stop_at_first};
  ctx.in_focal.assign(inst.space.size(), 0);
  inst.focal.for_each([&](std::size_t w) { ctx.in_focal[w] = 1; });
  ctx.excluded.resize(n_facts);
  for (std::size_t f = 0; f < n_facts; ++f) {
    inst.facts[f].complement().for_each(
        [&](std::size_t w) { ctx.excluded[f].push_back(static_cast<std::uint32_t>(w)); });
  }

  const std::uint64_t total = std::uint64_t{1} << n_facts;
  const std::uint64_t workers = std::clamp<std::uint64_t>(opt.threads, 1, std::max<std::uint64_t>(1, total / 1024));
  std::atomic<std::uint64_t> best_hit{std::numeric_limits<std::uint64_t>::max()};
  std::vector<RangeOutcome> parts(workers);
  auto run = [&](std::uint64_t k) {
    const std::uint64_t lo = total / workers * k;
    const std::uint64_t hi = k + 1 == workers ? total : total / workers * (k + 1);
    parts[k] = scan_range(ctx, lo, hi, best_hit);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t k = 0; k < workers; ++k) pool.emplace_back(run, k);
  }

  SolveResult result;
  for (const auto& part : parts) {
    result.stats.nodes_explored += part.stats.nodes_explored;
    result.stats.intersections_computed += part.stats.intersections_computed;
  }
  if (best_hit.load() != std::numeric_limits<std::uint64_t>::max()) {
    result.decision = Decision::yes;
    result.witness = report_from_mask(gray_code(best_hit.load()));
  }
  return result;
}

bool meets_threshold(const PersuasionInstance& inst, const ThresholdTest& meets, const EventSet& cut) {
  return meets(inst.space.measure_numerator(cut & inst.focal), inst.space.measure_numerator(cut));
}

}  // namespace

SolveResult brute_force_solve(const PersuasionInstance& instance, const BruteForceOptions& options) {
  const auto start = Clock::now();
  validate(instance);
  const std::size_t cap = std::min<std::size_t>(options.max_facts, 62);
  if (instance.num_facts() > cap) {
    throw Error(Errc::instance_too_large, "brute force is capped at " + std::to_string(cap) + " facts, instance has " +
                                              std::to_string(instance.num_facts()));
  }
  SolveResult result;
  if (auto small = instance.space.small_scaled_weights()) {
    result = run_gray<std::uint64_t>(instance, {small->begin(), small->end()}, options);
  } else {
    result = run_gray<BigInt>(instance, instance.space.scaled_weights(), options);
  }
  result.stats.wall_nanos = elapsed_nanos(start);
  return result;
}

SolveResult branch_and_bound_solve(const PersuasionInstance& instance) {
  const auto start = Clock::now();
  validate(instance);
  const ThresholdTest meets(instance.threshold);
  const std::size_t n_facts = instance.num_facts();

  struct Node {
    EventSet cut;
    std::vector<std::size_t> path;
  };

  SolveResult result;
  auto finish = [&](std::optional<std::vector<std::size_t>> path) {
    if (path) {
      result.decision = Decision::yes;
      result.witness = Report(std::move(*path));
    }
    result.stats.wall_nanos = elapsed_nanos(start);
    return result;
  };

  Node root{instance.space.full_event(), {}};
  result.stats.nodes_explored = 1;
  if (meets_threshold(instance, meets, root.cut)) return finish(root.path);

  std::unordered_set<EventSet, EventSetHash> seen{root.cut};
  std::vector<Node> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    std::vector<Node> children;
    for (std::size_t j = 0; j < n_facts; ++j) {
      EventSet child = node.cut & instance.facts[j];
      ++result.stats.intersections_computed;
      if (child == node.cut) continue;
      const BigInt given = instance.space.measure_numerator(child);
      // Undefined is absorbing: intersections only shrink.
      if (given == 0) continue;
      if (!seen.insert(child).second) continue;
      ++result.stats.nodes_explored;
      auto path = node.path;
      path.push_back(j);
      if (meets(instance.space.measure_numerator(child & instance.focal), given)) return finish(std::move(path));
      children.push_back(Node{std::move(child), std::move(path)});
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return finish(std::nullopt);
}

SolveResult greedy_solve(const PersuasionInstance& instance) {
  const auto start = Clock::now();
  validate(instance);
  const std::size_t n_facts = instance.num_facts();

  SolveResult result;
  EventSet current = instance.space.full_event();
  Rational current_value = event_prob(instance.space, instance.focal);
  std::vector<std::size_t> chosen;
  std::vector<char> used(n_facts, 0);

  bool success = current_value >= instance.threshold;
  while (!success && chosen.size() < n_facts) {
    ++result.stats.nodes_explored;
    std::optional<std::size_t> best;
    Rational best_value;
    EventSet best_cut;
    for (std::size_t j = 0; j < n_facts; ++j) {
      if (used[j]) continue;
      EventSet cand = current & instance.facts[j];
      ++result.stats.intersections_computed;
      auto value = conditional_prob(instance.space, instance.focal, cand);
      if (!value) continue;
      if (!best || *value > best_value) {
        best = j;
        best_value = std::move(*value);
        best_cut = std::move(cand);
      }
    }
    if (!best || best_value <= current_value) break;
    used[*best] = 1;
    chosen.push_back(*best);
    current = std::move(best_cut);
    current_value = best_value;
    success = current_value >= instance.threshold;
  }

  if (success) {
    result.decision = Decision::yes;
    result.witness = Report(std::move(chosen));
  }
  result.stats.wall_nanos = elapsed_nanos(start);
  return result;
}

}  // namespace persuasion
