#include "sigtree/signature.hpp"

#include <numeric>

namespace sigtree {

std::optional<std::size_t> first_violation(std::span<const std::uint64_t> s) {
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    sum += s[j];
    if (sum <= j + 1) return j;
  }
  return std::nullopt;
}

namespace {

bool proven_valid(const IntSeq& s) {
  if (const auto* p = std::get_if<IntSeq::Periodic>(&s.descriptor())) {
    const std::uint64_t period_sum =
        std::accumulate(p->period.begin(), p->period.end(), std::uint64_t{0});
    // Once the condition holds on u and one period, each further period
    // adds sum(v) - |v| >= 0 to the surplus.
    if (period_sum < p->period.size()) return false;
    const auto head = s.prefix(p->preperiod.size() + p->period.size());
    return !first_violation(head).has_value();
  }
  const auto& sub = std::get<IntSeq::Substitutive>(s.descriptor());
  if (!is_prolongable(*sub.sigma, sub.start)) return false;
  // sum of the coding over a prefix v dominates |sigma(v)| > |v|.
  const auto reach = reachable_letters(*sub.sigma, sub.start);
  for (Letter c = 0; c < sub.coding.size(); ++c)
    if (reach[c] && sub.coding[c] < sub.sigma->image(c).size()) return false;
  return true;
}

}  // namespace

ValidityReport check_valid(const IntSeq& s, std::size_t horizon) {
  if (horizon == 0) throw ArgumentError("horizon must be at least 1");
  ValidityReport report;
  const auto head = s.prefix(horizon);
  report.first_violation = first_violation(head);
  report.valid_on_prefix = !report.first_violation.has_value();
  report.proven_forever = report.valid_on_prefix && proven_valid(s);
  return report;
}

Rational growth_ratio(std::span<const std::uint64_t> v) {
  if (v.empty()) throw ArgumentError("growth ratio of an empty period");
  const std::uint64_t sum = std::accumulate(v.begin(), v.end(), std::uint64_t{0});
  return Rational(static_cast<std::int64_t>(sum),
                  static_cast<std::int64_t>(v.size()));
}

}  // namespace sigtree
