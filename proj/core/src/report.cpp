#include "sidonlab/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace sidonlab {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json points_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const auto& pt : pts) arr.push_back(json::array({pt.x, pt.y}));
    return arr;
}

std::string points_text(const std::vector<Point>& pts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << '(' << pts[i].x << ',' << pts[i].y << ')';
    }
    return os.str();
}

json witness_json(const std::optional<std::array<Point, 4>>& witness) {
    if (!witness) return nullptr;
    json arr = json::array();
    for (const auto& pt : *witness) arr.push_back(json::array({pt.x, pt.y}));
    return arr;
}

Report simple(std::string verdict, json j) {
    Report r;
    r.text = verdict + "\n";
    r.verdict_line = std::move(verdict);
    r.json = dump(j);
    return r;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    fail(Errc::UnsupportedFormat, "unknown format '" + name + "'");
}

const std::string& Report::body(Format f) const {
    switch (f) {
        case Format::Text: return text;
        case Format::Json: return json;
        case Format::Csv:
            if (!csv) fail(Errc::UnsupportedFormat, "this result has no CSV rendering");
            return *csv;
    }
    fail(Errc::Internal, "bad format");
}

Report report_field_info(const FieldPtr& field) {
    json j{{"p", field->p()}, {"n", field->n()}, {"q", field->q()},
           {"modulus", field->modulus()}, {"spec", field->to_string()}};
    std::ostringstream os;
    os << "field " << field->to_string() << " with q=" << field->q();
    return simple(os.str(), j);
}

Report report_eval(const Poly& p, const Elem& x, const Elem& value) {
    std::ostringstream os;
    os << to_string(p) << " at x=" << x.index << " -> " << value.index;
    return simple(os.str(), json{{"poly", to_string(p)}, {"x", x.index}, {"value", value.index}});
}

Report report_reduce(const Poly& input, const Poly& reduced) {
    std::ostringstream os;
    os << "reduced " << to_string(input) << " -> " << to_string(reduced);
    return simple(os.str(), json{{"input", to_string(input)},
                                 {"reduced", to_string(reduced)},
                                 {"degree", reduced.degree()}});
}

Report report_interpolate(const Poly& result) {
    return simple("interpolant " + to_string(result),
                  json{{"poly", to_string(result)}, {"degree", result.degree()}});
}

Report report_is_permutation(const Poly& p, bool result) {
    std::ostringstream os;
    os << "permutation=" << (result ? "true" : "false");
    return simple(os.str(), json{{"poly", to_string(p)}, {"permutation", result}});
}

Report report_planar(const Poly& p, const PlanarityResult& r) {
    std::ostringstream os;
    os << "planar=" << (r.planar ? "true" : "false");
    if (!r.planar) os << " witness_a=" << *r.witness;
    json j{{"poly", to_string(p)}, {"planar", r.planar}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    return simple(os.str(), j);
}

Report report_sidon_verdict(const SidonVerdict& verdict) {
    json j{{"is_sidon", verdict.is_sidon}, {"witness", witness_json(verdict.witness)}};
    std::ostringstream os;
    os << "sidon=" << (verdict.is_sidon ? "true" : "false");
    Report r = simple(os.str(), j);
    if (verdict.witness) {
        std::ostringstream body;
        body << r.verdict_line << "\nwitness: "
             << points_text({verdict.witness->begin(), verdict.witness->end()}) << "\n";
        r.text = body.str();
    }
    return r;
}

Report report_verify(const PointSet& points, const SidonVerdict& verdict, bool maximum) {
    json j{{"maximum_sidon", maximum},
           {"is_sidon", verdict.is_sidon},
           {"distinct_points", points.points.size()},
           {"points", points_json(points.points)},
           {"witness", witness_json(verdict.witness)}};
    std::ostringstream os;
    os << "maximum-sidon=" << (maximum ? "true" : "false");
    Report r = simple(os.str(), j);
    std::ostringstream body;
    body << r.verdict_line << "\npoints: " << points_text(points.points) << "\n";
    if (verdict.witness)
        body << "witness: " << points_text({verdict.witness->begin(), verdict.witness->end()})
             << "\n";
    r.text = body.str();
    return r;
}

Report report_companion(const Poly& p, const CompanionResult& r) {
    const char* status = r.status == CompanionStatus::Found
                             ? "found"
                             : (r.status == CompanionStatus::NotFound ? "not-found" : "unknown");
    json j{{"poly", to_string(p)},
           {"status", status},
           {"companion", r.companion ? json(to_string(*r.companion)) : json(nullptr)},
           {"method", r.method == CompanionMethod::Constructive ? "constructive" : "exhaustive"},
           {"note", r.note}};
    std::ostringstream os;
    os << "companion=" << status;
    if (r.companion) os << " Q=" << to_string(*r.companion);
    Report rep = simple(os.str(), j);
    rep.text = rep.verdict_line + "\n" + r.note + "\n";
    return rep;
}

Report report_enumerate(const FieldPtr& field, const std::vector<PointSet>& sets) {
    std::ostringstream os;
    os << sets.size() << " maximum Sidon sets over " << field->to_string();
    json j{{"field", field->to_string()}, {"count", sets.size()}};
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(points_json(s.points));
    j["sets"] = arr;

    Report r = simple(os.str(), j);
    std::ostringstream body;
    body << r.verdict_line << "\n";
    for (const auto& s : sets) body << points_text(s.points) << "\n";
    r.text = body.str();

    std::ostringstream csv;
    csv << "set,x,y\n";
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (const auto& pt : sets[i].points) csv << i << ',' << pt.x << ',' << pt.y << "\n";
    r.csv = csv.str();
    return r;
}

Report report_conjecture(const FieldPtr& field, const ConjectureReport& r) {
    std::ostringstream os;
    os << "p=" << field->p() << ": " << r.counterexamples.size() << " counterexamples among "
       << r.total_sets << " maximum Sidon sets";
    json j{{"p", field->p()},
           {"total_sets", r.total_sets},
           {"representable_sets", r.representable_sets},
           {"counterexamples", json::array()}};
    for (const auto& s : r.counterexamples) j["counterexamples"].push_back(points_json(s.points));
    Report rep = simple(os.str(), j);
    std::ostringstream body;
    body << rep.verdict_line << "\n";
    for (const auto& s : r.counterexamples) body << "counterexample: " << points_text(s.points) << "\n";
    rep.text = body.str();
    return rep;
}

Report report_profile(const Poly& p, const ValueProfile& profile) {
    const std::uint32_t q = profile.field->q();
    json j{{"poly", to_string(p)}, {"q", q}, {"v", profile.v}, {"d", profile.d}};
    std::ostringstream os;
    os << "profile of " << to_string(p) << ": d_0=" << profile.d[0];
    Report r = simple(os.str(), j);

    std::ostringstream body;
    body << "r\tv_r\td_r\n";
    for (std::uint32_t i = 0; i < q; ++i)
        body << i << '\t' << profile.v[i] << '\t' << profile.d[i] << "\n";
    r.text = body.str();

    std::ostringstream csv;
    csv << "r,v_r,d_r\n";
    for (std::uint32_t i = 0; i < q; ++i)
        csv << i << ',' << profile.v[i] << ',' << profile.d[i] << "\n";
    r.csv = csv.str();
    return r;
}

Report report_invariant(const Poly& p, char kind, std::uint32_t n, std::uint64_t value) {
    std::ostringstream os;
    os << kind << "(" << to_string(p) << "," << n << ") = " << value;
    return simple(os.str(), json{{"poly", to_string(p)},
                                 {"invariant", std::string(1, kind)},
                                 {"n", n},
                                 {"value", value}});
}

Report report_signature(const Poly& p, const InvariantSignature& sig) {
    json j = json::array({sig.v_multiset, sig.f, sig.g});
    std::ostringstream os;
    os << "signature of " << to_string(p);
    Report r = simple(os.str(), j);
    std::ostringstream body;
    body << r.verdict_line << "\n" << j.dump() << "\n";
    r.text = body.str();
    return r;
}

Report report_equivalence(const EquivalenceResult& r) {
    json j{{"status", to_string(r.status)},
           {"refuting_invariant", r.refuting_invariant ? json(*r.refuting_invariant) : json(nullptr)},
           {"certificate", nullptr},
           {"inputs_reduced", r.inputs_reduced},
           {"note", r.note}};
    if (r.certificate)
        j["certificate"] = json{{"R", to_string(r.certificate->first)},
                                {"T", to_string(r.certificate->second)}};
    std::ostringstream os;
    os << "equivalence=" << to_string(r.status);
    Report rep = simple(os.str(), j);
    std::ostringstream body;
    body << rep.verdict_line << "\n";
    if (r.refuting_invariant) body << "refuted by: " << *r.refuting_invariant << "\n";
    if (r.certificate)
        body << "R = " << to_string(r.certificate->first)
             << "\nT = " << to_string(r.certificate->second) << "\n";
    if (!r.note.empty()) body << r.note << "\n";
    rep.text = body.str();
    return rep;
}

Report report_cubic_class(const CubicClassification& c) {
    json j{{"class", to_string(c.cls)},
           {"w", c.w},
           {"post", to_string(c.post)},
           {"pre", to_string(c.pre)},
           {"canonical_maps", nullptr}};
    if (c.canonical_maps)
        j["canonical_maps"] = json{{"post", to_string(c.canonical_maps->first)},
                                   {"pre", to_string(c.canonical_maps->second)}};
    std::ostringstream os;
    os << "class=" << to_string(c.cls) << " w=" << c.w;
    Report rep = simple(os.str(), j);
    std::ostringstream body;
    body << rep.verdict_line << "\npost = " << to_string(c.post)
         << "\npre = " << to_string(c.pre) << "\n";
    if (c.canonical_maps)
        body << "canonical post = " << to_string(c.canonical_maps->first)
             << "\ncanonical pre = " << to_string(c.canonical_maps->second) << "\n";
    rep.text = body.str();
    return rep;
}

Report report_verdict_tag(const std::string& subject, const SidonVerdictTag& tag) {
    json j{{"subject", subject},
           {"verdict", to_string(tag.kind)},
           {"companion", tag.companion ? json(to_string(*tag.companion)) : json(nullptr)},
           {"reason", tag.reason}};
    std::ostringstream os;
    os << "verdict=" << to_string(tag.kind);
    if (tag.companion) os << " companion=" << to_string(*tag.companion);
    Report rep = simple(os.str(), j);
    rep.text = rep.verdict_line + "\n" + tag.reason + "\n";
    return rep;
}

Report report_criterion(const CriterionReport& r) {
    json j{{"criterion", to_string(r.criterion)}, {"q", r.field->q()}, {"rows", json::array()},
           {"verdict", r.passes ? "passes" : "violates"}};
    for (const auto& row : r.rows)
        j["rows"].push_back(json{{"r", row.r}, {"lhs", row.lhs}, {"bound", row.bound},
                                 {"ok", row.ok}});
    std::ostringstream os;
    os << "criterion=" << to_string(r.criterion) << " verdict="
       << (r.passes ? "passes" : "violates");
    if (r.first_violation)
        os << " at r=" << *r.first_violation << " lhs=" << r.rows[*r.first_violation].lhs
           << " bound=" << r.rows[*r.first_violation].bound;
    Report rep = simple(os.str(), j);

    std::ostringstream body;
    body << rep.verdict_line << "\nr\tlhs\tbound\tok\n";
    for (const auto& row : r.rows)
        body << row.r << '\t' << row.lhs << '\t' << row.bound << '\t' << (row.ok ? "yes" : "no")
             << "\n";
    rep.text = body.str();

    std::ostringstream csv;
    csv << "r,lhs,bound,ok\n";
    for (const auto& row : r.rows)
        csv << row.r << ',' << row.lhs << ',' << row.bound << ',' << (row.ok ? "true" : "false")
            << "\n";
    rep.csv = csv.str();
    return rep;
}

Report report_count_form(const FieldPtr& field, std::uint32_t c, const FormCount& fc) {
    const bool agree = fc.closed_form == fc.brute_force;
    std::ostringstream os;
    os << "count(a^2+ab+b^2=" << c << ") closed=" << fc.closed_form
       << " brute=" << fc.brute_force << " agree=" << (agree ? "true" : "false");
    return simple(os.str(), json{{"p", field->p()},
                                 {"c", c},
                                 {"closed_form", fc.closed_form},
                                 {"brute_force", fc.brute_force},
                                 {"agree", agree}});
}

Report report_d0_closed_form(const FieldPtr& field, std::uint32_t c, std::uint64_t closed,
                             std::uint64_t profile_d0) {
    const bool agree = closed == profile_d0;
    std::ostringstream os;
    os << "d_0(x^3-" << c << "x) closed=" << closed << " profile=" << profile_d0
       << " agree=" << (agree ? "true" : "false");
    return simple(os.str(), json{{"p", field->p()},
                                 {"c", c},
                                 {"closed_form", closed},
                                 {"profile_d0", profile_d0},
                                 {"agree", agree}});
}

Report report_congruence_bridge(const std::vector<CongruenceBridgeRow>& rows) {
    bool all_ok = true;
    for (const auto& row : rows) all_ok &= row.ok;
    json j{{"all_ok", all_ok}, {"rows", json::array()}};
    for (const auto& row : rows)
        j["rows"].push_back(json{{"p", row.p}, {"eta3", row.eta3},
                                 {"twelve_divides", row.twelve_divides}, {"ok", row.ok}});
    std::ostringstream os;
    os << "congruence-bridge " << (all_ok ? "holds" : "fails") << " for " << rows.size()
       << " primes";
    Report rep = simple(os.str(), j);

    std::ostringstream body;
    body << rep.verdict_line << "\np\teta(3)\t12|p+-1\tok\n";
    for (const auto& row : rows)
        body << row.p << '\t' << row.eta3 << '\t' << (row.twelve_divides ? "yes" : "no") << '\t'
             << (row.ok ? "yes" : "no") << "\n";
    rep.text = body.str();

    std::ostringstream csv;
    csv << "p,eta3,twelve_divides,ok\n";
    for (const auto& row : rows)
        csv << row.p << ',' << row.eta3 << ',' << (row.twelve_divides ? "true" : "false") << ','
            << (row.ok ? "true" : "false") << "\n";
    rep.csv = csv.str();
    return rep;
}

}  // namespace sidonlab
