#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "sidonlab/report.hpp"

namespace sidonlab {

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Report format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output,
                    "Write the report to this file; stdout gets the one-line verdict");
}

void emit(const Report& report, const CommonOpts& opts, std::ostream& out) {
    const Format format = parse_format(opts.format);
    const std::string& body = report.body(format);  // may throw UnsupportedFormat
    if (opts.output.empty()) {
        out << body;
        return;
    }
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) fail(Errc::Internal, "cannot open output file '" + opts.output + "'");
    file << body;
    out << report.verdict_line << "\n";
}

std::vector<std::uint32_t> parse_index_list(const std::string& text) {
    std::vector<std::uint32_t> values;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw SyntaxError("expected a comma-separated list of indices", 0);
        values.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return values;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail(Errc::Internal, "cannot read file '" + path + "'");
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sidonlab: Sidon sets over F_q x F_q parametrized by polynomial pairs"};
    app.require_subcommand(1);

    // Shared option storage. Only one subcommand runs per invocation.
    std::string field_spec, poly_p, poly_q, points_file, values_list, pairs_list;
    std::uint32_t x_index = 0, c_index = 0, inv_n = 0, max_p = 199;
    std::uint64_t exponent_r = 1, budget = 100'000'000;
    unsigned jobs = 1;
    bool force = false, flag_constructive = false, flag_exhaustive = false;
    bool flag_refute = false, flag_certify = false;
    std::string inv_kind = "f";
    CommonOpts common[32];
    int slot = 0;

    Report report;
    bool have_report = false;
    auto finish = [&](Report r, const CommonOpts& opts) {
        report = std::move(r);
        have_report = true;
        emit(report, opts, out);
    };

    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_spec, "Field spec: p, p^n or p^n/c0,c1,...,cn")
            ->required();
    };

    // field-info ------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "field-info", "Construct F_q and print its canonical data: order, characteristic, "
                          "extension degree and the monic irreducible modulus");
        add_field(cmd);
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            finish(report_field_info(f), *cmd_opts);
        });
    }
    // eval ------------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand("eval", "Evaluate P at one element (Horner scheme)");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        cmd->add_option("--x", x_index, "Element index")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            const Elem x = make_elem(f, x_index);
            finish(report_eval(P, x, evaluate(P, x)), *cmd_opts);
        });
    }
    // reduce ----------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "reduce", "Canonical representative of degree <= q-1 modulo x^q - x, by exponent "
                      "folding e -> ((e-1) mod (q-1)) + 1");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            finish(report_reduce(P, reduce_mod_xq_minus_x(P)), *cmd_opts);
        });
    }
    // interpolate -----------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "interpolate", "Lagrange interpolation: the unique polynomial of degree < #points "
                           "through the given points");
        add_field(cmd);
        cmd->add_option("--values", values_list,
                        "Length-q value table v0,v1,... (entry i = value at element i)");
        cmd->add_option("--pairs", pairs_list, "Point list x0,y0;x1,y1;... (element indices)");
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            Poly result = zero_poly(f);
            if (!values_list.empty() == !pairs_list.empty())
                fail(Errc::UnsupportedFormat, "give exactly one of --values or --pairs");
            if (!values_list.empty()) {
                auto vals = parse_index_list(values_list);
                if (vals.size() != f->q())
                    fail(Errc::DegreeOutOfRange, "--values needs exactly q entries");
                for (auto v : vals)
                    if (v >= f->q()) fail(Errc::CoefficientOutOfRange, "value out of range");
                result = interpolate(ValueTable{f, vals});
            } else {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
                std::istringstream is(pairs_list);
                std::string tok;
                while (std::getline(is, tok, ';')) {
                    auto xy = parse_index_list(tok);
                    if (xy.size() != 2) throw SyntaxError("each pair must be 'x,y'", 0);
                    pts.emplace_back(xy[0], xy[1]);
                }
                result = interpolate(f, pts);
            }
            finish(report_interpolate(result), *cmd_opts);
        });
    }
    // is-permutation ----------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand("is-permutation",
                                       "Does P induce a bijection of F_q? (full value table)");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            finish(report_is_permutation(P, is_permutation(P)), *cmd_opts);
        });
    }
    // planar ------------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "planar", "Is P planar, i.e. is P(x+a) - P(x) a permutation for every nonzero a? "
                      "Planar polynomials always admit a Sidon companion");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            finish(report_planar(P, is_planar(P)), *cmd_opts);
        });
    }
    // verify --------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "verify", "Verify a maximum Sidon set: q distinct points and every nonzero "
                      "difference from at most one ordered pair. Input is a pair (P,Q) or a "
                      "point-set CSV file");
        cmd->add_option("--field", field_spec, "Field spec: p, p^n or p^n/c0,c1,...,cn");
        cmd->add_option("--P", poly_p, "First coordinate polynomial");
        cmd->add_option("--Q", poly_q, "Second coordinate polynomial");
        cmd->add_option("--points", points_file, "Point-set CSV file (overrides --P/--Q)");
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            PointSet set;
            if (!points_file.empty()) {
                set = pointset_from_csv(read_file(points_file));
            } else {
                if (poly_p.empty() || poly_q.empty() || field_spec.empty())
                    fail(Errc::UnsupportedFormat, "give --field with --P and --Q, or --points");
                const FieldPtr f = parse_field(field_spec);
                set = pair_point_set(parse_poly(poly_p, f), parse_poly(poly_q, f));
            }
            const SidonVerdict verdict = is_sidon_set(set);
            const bool maximum = verdict.is_sidon && set.points.size() == set.field->q();
            finish(report_verify(set, verdict, maximum), *cmd_opts);
        });
    }
    // companion -----------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "companion", "Find Q making (P,Q) a maximum Sidon set: rule-based construction "
                         "(low degree, coprime monomials x^r -> x^(2r), planar) and/or "
                         "exhaustive search over normalized value tables");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        cmd->add_flag("--constructive", flag_constructive, "Apply only the constructive rules");
        cmd->add_flag("--exhaustive", flag_exhaustive, "Run only the exhaustive search");
        cmd->add_option("--budget", budget, "Node budget per first-level search branch")
            ->capture_default_str();
        cmd->add_option("--jobs", jobs, "Worker threads for the search")->capture_default_str();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            if (flag_constructive && flag_exhaustive)
                fail(Errc::UnsupportedFormat, "--constructive and --exhaustive are exclusive");
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            CompanionResult result;
            if (flag_exhaustive) {
                err << "exhaustive search over " << f->q() << " branches\n";
                result = companion_search(P, budget, jobs);
            } else {
                result = constructive_companion(P);
                if (result.status != CompanionStatus::Found && !flag_constructive) {
                    err << "constructive rules inconclusive; falling back to exhaustive search\n";
                    result = companion_search(P, budget, jobs);
                }
            }
            finish(report_companion(P, result), *cmd_opts);
        });
    }
    // enumerate -----------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "enumerate", "Enumerate all maximum (size-q) Sidon sets over F_q x F_q in "
                         "lexicographic order, by pruned depth-first search");
        add_field(cmd);
        cmd->add_flag("--force", force, "Allow q > 5");
        cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            finish(report_enumerate(f, enumerate_maximum_sidon_sets(f, force, jobs)), *cmd_opts);
        });
    }
    // conjecture ------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "conjecture", "Check that every maximum Sidon set over F_p x F_p is parametrized "
                          "by a pair of polynomials of degree 1..2, trying all p! orderings "
                          "of each enumerated set");
        add_field(cmd);
        cmd->add_flag("--force", force, "Allow p > 5");
        cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            if (f->q() >= 5) err << "checking all orderings of every enumerated set\n";
            finish(report_conjecture(f, conjecture_check(f, force, jobs)), *cmd_opts);
        });
    }
    // profile ---------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "profile", "Preimage counts v_r and difference counts d_r of P, with "
                       "d_r = sum_i v_i v_(i+r)");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            finish(report_profile(P, value_profile(P)), *cmd_opts);
        });
    }
    // invariant -------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "invariant", "f(P,n): shifts gamma for which P - gamma has a root of multiplicity "
                         ">= n; g(P,n): shifts with exactly n distinct preimages");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        cmd->add_option("--kind", inv_kind, "f or g")->check(CLI::IsMember({"f", "g"}))
            ->required();
        cmd->add_option("--n", inv_n, "Multiplicity / root-count parameter")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            const std::uint64_t value =
                inv_kind == "f" ? f_invariant(P, inv_n) : g_invariant(P, inv_n);
            finish(report_invariant(P, inv_kind[0], inv_n, value), *cmd_opts);
        });
    }
    // signature ---------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "signature", "Equivalence signature of P: sorted preimage-count multiset, f(P,n) "
                         "for n=1..deg and g(P,n) for n=0..deg");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            finish(report_signature(P, invariant_signature(P)), *cmd_opts);
        });
    }
    // equiv -------------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "equiv", "Are P and P' related by P' = R o P o T for permutation polynomials "
                     "R, T? Refute through preimage-count invariants or search all inner "
                     "permutations for a verified certificate (q <= 7)");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "First polynomial")->required();
        cmd->add_option("--Q", poly_q, "Second polynomial")->required();
        cmd->add_flag("--refute-only", flag_refute, "Invariant comparison only");
        cmd->add_flag("--certify", flag_certify, "Exhaustive certificate search");
        cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            if (flag_refute == flag_certify)
                fail(Errc::UnsupportedFormat, "give exactly one of --refute-only or --certify");
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            const Poly P2 = parse_poly(poly_q, f);
            const EquivMode mode = flag_refute ? EquivMode::RefuteOnly : EquivMode::Certify;
            finish(report_equivalence(are_equivalent(P, P2, mode, jobs)), *cmd_opts);
        });
    }
    // classify-cubic ------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "classify-cubic", "Depress a cubic to x^3 - wx by verified affine maps; the class "
                              "(cube / unit twist / nonsquare twist) is decided by the "
                              "quadratic character of w");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Cubic polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            finish(report_cubic_class(normalize_cubic(parse_poly(poly_p, f))), *cmd_opts);
        });
    }
    // monomial-verdict ----------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "monomial-verdict", "Sidon verdict for x^r: Sidon for r <= 2 and for "
                                "gcd(r, q-1) = 1 (companion x^(2r)); not Sidon for r > 2 "
                                "dividing q-1; unknown otherwise");
        add_field(cmd);
        cmd->add_option("--r", exponent_r, "Monomial exponent")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const SidonVerdictTag tag = monomial_verdict(exponent_r, f);
            finish(report_verdict_tag("x^" + std::to_string(exponent_r), tag), *cmd_opts);
        });
    }
    // cubic-verdict --------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "cubic-verdict", "Sidon verdict for a cubic via its depressed class: cube class "
                             "decided by q mod 6; twisted classes over F_p by congruences mod "
                             "12, re-certified by the criterion reports; open cases unknown");
        add_field(cmd);
        cmd->add_option("--P", poly_p, "Cubic polynomial")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const Poly P = parse_poly(poly_p, f);
            finish(report_verdict_tag(to_string(P), cubic_sidon_verdict(P)), *cmd_opts);
        });
    }
    // criteria -------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("criteria",
                                       "Necessary conditions for admitting a Sidon companion");
        cmd->require_subcommand(1);
        {
            auto& opts = common[slot++];
            auto* sub = cmd->add_subcommand(
                "diff", "Difference-count bound: d_r <= 2q-1 at r = 0 and d_r <= q otherwise; "
                        "a violation certifies that no companion exists");
            add_field(sub);
            sub->add_option("--P", poly_p, "Polynomial")->required();
            add_common(sub, opts);
            sub->callback([&, cmd_opts = &opts] {
                const FieldPtr f = parse_field(field_spec);
                finish(report_criterion(check_difference_bound(parse_poly(poly_p, f))),
                       *cmd_opts);
            });
        }
        {
            auto& opts = common[slot++];
            auto* sub = cmd->add_subcommand(
                "sum", "Sum-count bound: v_(r/2) + sum_i v_i v_(r-i) <= 2q for every r; a "
                       "violation certifies that no companion exists");
            add_field(sub);
            sub->add_option("--P", poly_p, "Polynomial")->required();
            add_common(sub, opts);
            sub->callback([&, cmd_opts = &opts] {
                const FieldPtr f = parse_field(field_spec);
                finish(report_criterion(check_sum_bound(parse_poly(poly_p, f))), *cmd_opts);
            });
        }
    }
    // count-form ----------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "count-form", "Count solutions of a^2 + ab + b^2 = c over F_p: closed form "
                          "p - eta(-3) next to an O(p^2) scan");
        add_field(cmd);
        cmd->add_option("--c", c_index, "Nonzero right-hand side (element index)")->required();
        cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            finish(report_count_form(f, c_index, count_quadratic_form(f, c_index, jobs)),
                   *cmd_opts);
        });
    }
    // d0-cubic ------------------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "d0-cubic", "d_0(x^3 - cx) over F_p from the four-case closed form keyed on "
                        "p mod 6 and eta(c/3), next to the profile count");
        add_field(cmd);
        cmd->add_option("--c", c_index, "Nonzero coefficient (element index)")->required();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            const FieldPtr f = parse_field(field_spec);
            const std::uint64_t closed = d0_cubic_closed_form(f, c_index);
            const Poly rep = make_poly(f, {0, f->neg(c_index), 0, 1});
            finish(report_d0_closed_form(f, c_index, closed, value_profile(rep).d[0]),
                   *cmd_opts);
        });
    }
    // congruence-bridge -----------------------------------------------------------
    {
        auto& opts = common[slot++];
        auto* cmd = app.add_subcommand(
            "congruence-bridge", "eta(3) = +1 over F_p exactly when 12 | p-1 or 12 | p+1, "
                                 "checked for every prime 5 <= p <= max-p");
        cmd->add_option("--max-p", max_p, "Upper bound for the prime scan")
            ->capture_default_str();
        add_common(cmd, opts);
        cmd->callback([&, cmd_opts = &opts] {
            finish(report_congruence_bridge(congruence_bridge(max_p)), *cmd_opts);
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (!have_report) {
        err << "usage error: no subcommand executed\n";
        return 2;
    }
    return 0;
}

}  // namespace sidonlab
