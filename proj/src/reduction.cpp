#include "persuasion/reduction.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>

#include "persuasion/error.hpp"
#include "persuasion/exact_cover.hpp"
#include "persuasion/format.hpp"
#include "persuasion/solvers.hpp"

namespace persuasion {

ReductionMap reduce_exact_cover(const ExactCoverInstance& xc) {
  validate(xc);
  const std::size_t s = xc.universe_size;
  const std::size_t omega = 2 * s + 1;

  const std::size_t primal = 0;
  const std::size_t dual = s;
  const std::size_t z = 2 * s;

  std::vector<std::string> labels;
  labels.reserve(omega);
  for (std::size_t e = 0; e < s; ++e) labels.push_back("s" + std::to_string(e));
  for (std::size_t e = 0; e < s; ++e) labels.push_back("sbar" + std::to_string(e));
  labels.push_back("z");
  std::vector<Rational> weights(omega, Rational(1, static_cast<long>(omega)));

  std::vector<EventSet> facts;
  std::vector<std::size_t> fact_to_block;
  facts.reserve(xc.blocks.size());
  for (std::size_t i = 0; i < xc.blocks.size(); ++i) {
    EventSet fact(omega);
    for (std::size_t e = 0; e < s; ++e) {
      if (xc.blocks[i].contains(e)) {
        fact.insert(primal + e);
      } else {
        fact.insert(dual + e);
      }
    }
    fact.insert(z);
    facts.push_back(std::move(fact));
    fact_to_block.push_back(i);
  }

  PersuasionInstance target{make_space(std::move(labels), std::move(weights)), EventSet::from_indices(omega, {z}),
                            std::move(facts), Rational(1)};
  return ReductionMap{xc, std::move(target), z, primal, dual, std::move(fact_to_block)};
}

DecodedCover decode_witness(const ReductionMap& map, const Report& report) {
  const auto& xc = map.source;
  DecodedCover out;
  EventSet unite(xc.universe_size);
  EventSet meet = EventSet::full(xc.universe_size);
  for (std::size_t i : report.indices()) {
    if (i >= map.fact_to_block.size()) {
      throw Error(Errc::index_out_of_range, "report names fact " + std::to_string(i) + " but the reduction has " +
                                                std::to_string(map.fact_to_block.size()));
    }
    const auto& block = xc.blocks[map.fact_to_block[i]];
    if (unite.intersects(block)) out.pairwise_disjoint = false;
    unite |= block;
    meet &= block;
    out.blocks.push_back(map.fact_to_block[i]);
  }
  out.covers_universe = unite.is_full();
  out.empty_meet = meet.empty();
  return out;
}

namespace {

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  // C(n, k), saturating at cap + 1.
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (next > cap) return cap + 1;
    r = static_cast<std::size_t>(next);
  }
  return r;
}

// Visits every nondecreasing sequence of block masks of length <= max_len.
template <typename Fn>
void for_each_multiset(std::uint64_t num_masks, std::size_t max_len, std::vector<std::uint64_t>& seq, Fn&& fn) {
  fn(seq);
  if (seq.size() == max_len) return;
  const std::uint64_t start = seq.empty() ? 0 : seq.back();
  for (std::uint64_t m = start; m < num_masks; ++m) {
    seq.push_back(m);
    for_each_multiset(num_masks, max_len, seq, fn);
    seq.pop_back();
  }
}

}  // namespace

std::size_t audit_instance_count(std::size_t max_universe, std::size_t max_blocks) {
  if (max_universe > kAuditMaxUniverse) return kAuditMaxInstances + 1;
  std::size_t total = 0;
  for (std::size_t u = 0; u <= max_universe; ++u) {
    const std::size_t masks = std::size_t{1} << u;
    for (std::size_t k = 0; k <= max_blocks; ++k) {
      // multisets of size k from `masks` kinds
      total += binomial_capped(masks + k - 1, k, kAuditMaxInstances);
      if (total > kAuditMaxInstances) return kAuditMaxInstances + 1;
    }
  }
  return total;
}

AuditReport audit_reduction(std::size_t max_universe, std::size_t max_blocks) {
  if (max_universe > kAuditMaxUniverse || audit_instance_count(max_universe, max_blocks) > kAuditMaxInstances) {
    throw Error(Errc::bounds_too_large, "audit bounds (" + std::to_string(max_universe) + ", " +
                                            std::to_string(max_blocks) + ") exceed the enumeration limit");
  }
  AuditReport report;
  std::vector<std::pair<std::string, AuditFinding>> keyed;
  for (std::size_t u = 0; u <= max_universe; ++u) {
    std::vector<std::uint64_t> seq;
    for_each_multiset(std::uint64_t{1} << u, max_blocks, seq, [&](const std::vector<std::uint64_t>& masks) {
      ExactCoverInstance xc{u, {}};
      for (auto m : masks) {
        EventSet block(u);
        for (std::size_t e = 0; e < u; ++e) {
          if ((m >> e) & 1u) block.insert(e);
        }
        xc.blocks.push_back(std::move(block));
      }
      ++report.checked;

      const auto cover = xc_solve(xc);
      const auto reduced = reduce_exact_cover(xc);
      const auto solved = brute_force_solve(reduced.target, {.stop_at_first = true});
      const bool pers = solved.decision == Decision::yes;
      const bool meet = exists_cover_with_empty_meet(xc);
      if (pers != meet) ++report.meet_mismatches;
      if (cover.has_value() != pers) {
        AuditFinding finding{xc, cover.has_value(), pers, meet, solved.witness, cover};
        keyed.emplace_back(serialize_instance(xc), std::move(finding));
      }
    });
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, finding] : keyed) report.findings.push_back(std::move(finding));
  return report;
}

std::string audit_record_stream(const AuditReport& report) {
  using Json = nlohmann::ordered_json;
  std::string out;
  for (const auto& f : report.findings) {
    Json blocks = Json::array();
    for (const auto& b : f.instance.blocks) blocks.push_back(b.indices());
    Json rec;
    rec["instance"] = Json{{"type", "exact_cover"}, {"universe", f.instance.universe_size}, {"blocks", blocks}};
    rec["xc_exact"] = f.xc_exact;
    rec["pers"] = f.pers;
    rec["meet"] = f.meet;
    rec["witness_report"] = f.witness_report ? Json(f.witness_report->indices()) : Json(nullptr);
    rec["witness_cover"] = f.witness_cover ? Json(*f.witness_cover) : Json(nullptr);
    out += rec.dump() + "\n";
  }
  Json summary;
  summary["checked"] = report.checked;
  summary["discrepancies"] = report.findings.size();
  summary["pers_equals_meet"] = report.pers_equals_meet();
  out += summary.dump() + "\n";
  return out;
}

}  // namespace persuasion
