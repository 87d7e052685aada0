#include "srtk/ensemble.hpp"

#include <algorithm>
#include <map>

#include "srtk/error.hpp"

namespace srtk {

std::vector<VotedSpan> count_votes(const std::vector<std::vector<EntitySpan>>& system_spans) {
  std::map<EntitySpan, int> tally;
  for (const auto& spans : system_spans)
    for (const EntitySpan& sp : spans) ++tally[sp];

  std::vector<VotedSpan> out;
  out.reserve(tally.size());
  for (const auto& [span, votes] : tally) out.push_back({span, votes});
  return out;
}

std::vector<EntitySpan> resolve_overlaps(std::vector<VotedSpan> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const VotedSpan& a, const VotedSpan& b) {
                     if (a.votes != b.votes) return a.votes > b.votes;
                     if (a.span.length() != b.span.length())
                       return a.span.length() > b.span.length();
                     if (a.span.start != b.span.start) return a.span.start < b.span.start;
                     return a.span.entity_class < b.span.entity_class;
                   });

  std::vector<EntitySpan> accepted;
  for (const VotedSpan& c : candidates) {
    bool clash = false;
    for (const EntitySpan& a : accepted)
      if (a.overlaps(c.span)) {
        clash = true;
        break;
      }
    if (!clash) accepted.push_back(c.span);
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

std::vector<std::vector<EntitySpan>> majority_vote(
    const std::vector<std::vector<std::vector<EntitySpan>>>& systems,
    std::optional<int> threshold) {
  if (systems.empty()) throw InputError("majority_vote needs at least one system");
  const size_t sentences = systems[0].size();
  for (const auto& sys : systems)
    if (sys.size() != sentences)
      throw InputError("all systems must cover the same sentence count");

  const int k = static_cast<int>(systems.size());
  const int need = threshold.value_or(k / 2 + 1);

  std::vector<std::vector<EntitySpan>> out(sentences);
  std::vector<std::vector<EntitySpan>> per_system(systems.size());
  for (size_t i = 0; i < sentences; ++i) {
    for (size_t s = 0; s < systems.size(); ++s) per_system[s] = systems[s][i];
    std::vector<VotedSpan> voted = count_votes(per_system);
    std::erase_if(voted, [&](const VotedSpan& v) { return v.votes < need; });
    out[i] = resolve_overlaps(std::move(voted));
  }
  return out;
}

}  // namespace srtk
