#ifndef SIDONLAB_REPORT_HPP
#define SIDONLAB_REPORT_HPP

#include <optional>
#include <string>

#include "sidonlab/criteria.hpp"
#include "sidonlab/invariants.hpp"
#include "sidonlab/sidon.hpp"

namespace sidonlab {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);

// A rendered result: a one-line verdict plus the full report in each format
// the result kind supports. Key order, row order, and line endings are
// stable so identical inputs render byte-identical reports.
struct Report {
    std::string verdict_line;
    std::string text;
    std::string json;
    std::optional<std::string> csv;

    const std::string& body(Format f) const;
};

Report report_field_info(const FieldPtr& field);
Report report_eval(const Poly& p, const Elem& x, const Elem& value);
Report report_reduce(const Poly& input, const Poly& reduced);
Report report_interpolate(const Poly& result);
Report report_is_permutation(const Poly& p, bool result);
Report report_planar(const Poly& p, const PlanarityResult& r);
Report report_verify(const PointSet& points, const SidonVerdict& verdict, bool maximum);
Report report_sidon_verdict(const SidonVerdict& verdict);
Report report_companion(const Poly& p, const CompanionResult& r);
Report report_enumerate(const FieldPtr& field, const std::vector<PointSet>& sets);
Report report_conjecture(const FieldPtr& field, const ConjectureReport& r);
Report report_profile(const Poly& p, const ValueProfile& profile);
Report report_invariant(const Poly& p, char kind, std::uint32_t n, std::uint64_t value);
Report report_signature(const Poly& p, const InvariantSignature& sig);
Report report_equivalence(const EquivalenceResult& r);
Report report_cubic_class(const CubicClassification& c);
Report report_verdict_tag(const std::string& subject, const SidonVerdictTag& tag);
Report report_criterion(const CriterionReport& r);
Report report_count_form(const FieldPtr& field, std::uint32_t c, const FormCount& fc);
Report report_d0_closed_form(const FieldPtr& field, std::uint32_t c, std::uint64_t closed,
                             std::uint64_t profile_d0);
Report report_congruence_bridge(const std::vector<CongruenceBridgeRow>& rows);

}  // namespace sidonlab

#endif
