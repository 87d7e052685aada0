#pragma once

#include <optional>
#include <vector>

#include "srtk/schemes.hpp"

namespace srtk {

struct VotedSpan {
  EntitySpan span;
  int votes = 0;
};

// Candidate spans for one sentence with their exact-match vote counts,
// sorted by span. Every distinct (start, end, class) predicted by at least
// one system appears once.
std::vector<VotedSpan> count_votes(const std::vector<std::vector<EntitySpan>>& system_spans);

// Greedy selection by (votes desc, length desc, start asc, class asc);
// accepted spans never overlap. Result is sorted by start.
std::vector<EntitySpan> resolve_overlaps(std::vector<VotedSpan> candidates);

// Span-level majority voting over k aligned systems. systems[k][sentence]
// holds one system's spans for one sentence; all systems must have the same
// sentence count (InputError otherwise; k = 0 too). Default threshold is
// floor(k/2)+1, a strict majority.
std::vector<std::vector<EntitySpan>> majority_vote(
    const std::vector<std::vector<std::vector<EntitySpan>>>& systems,
    std::optional<int> threshold = std::nullopt);

}  // namespace srtk
