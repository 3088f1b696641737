#include <set>
#include <string>

#include "confalg/conf_space.hpp"

namespace confalg {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::MatchInIsoRange: return "match-in-iso-range";
    case Verdict::SurjectionRangeConsistent: return "surjection-range-consistent";
    case Verdict::OutsideRange: return "outside-range";
    case Verdict::Mismatch: return "MISMATCH";
  }
  return "unknown";
}

std::size_t StabilityReport::mismatches() const {
  std::size_t count = 0;
  for (const auto& row : rows) count += row.verdict == Verdict::Mismatch ? 1 : 0;
  return count;
}

StabilityReport stability_report(const ConfResult& r, const SpaceMeta& meta) {
  if (!meta.connected) throw Error(ErrorCode::PreconditionFailed, "space is not connected");
  if (!meta.smooth) throw Error(ErrorCode::PreconditionFailed, "space is not smooth");
  if (!meta.dimension || *meta.dimension < 1) {
    throw Error(ErrorCode::PreconditionFailed, "space has no known positive dimension");
  }
  for (const auto& card : r.cards) {
    if (!card.dualizing) throw Error(ErrorCode::PreconditionFailed, "dualizing tables are missing");
  }

  StabilityReport report;
  report.curve_case = *meta.dimension == 1;
  for (std::size_t idx = 0; idx + 1 < r.cards.size(); ++idx) {
    const int k = r.cards[idx].k;
    const auto lower = r.cards[idx].dualizing->degree_totals();
    const auto upper = r.cards[idx + 1].dualizing->degree_totals();
    std::set<int> degrees;
    for (const auto& [d, dim] : lower) degrees.insert(d);
    for (const auto& [d, dim] : upper) degrees.insert(d);

    // Curves: iso for * > -k, surjection at -k. Otherwise iso for * >= -k,
    // surjection at -k-1.
    const int iso_from = report.curve_case ? -k + 1 : -k;
    const int surjective_at = iso_from - 1;
    for (int degree : degrees) {
      StabilityRow row;
      row.k = k;
      row.degree = degree;
      row.dim_k = lower.contains(degree) ? lower.at(degree) : 0;
      row.dim_k_plus_1 = upper.contains(degree) ? upper.at(degree) : 0;
      if (degree >= iso_from) {
        row.verdict = row.dim_k == row.dim_k_plus_1 ? Verdict::MatchInIsoRange : Verdict::Mismatch;
      } else if (degree == surjective_at) {
        row.verdict = row.dim_k_plus_1 >= row.dim_k ? Verdict::SurjectionRangeConsistent : Verdict::Mismatch;
      } else {
        row.verdict = Verdict::OutsideRange;
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace confalg
