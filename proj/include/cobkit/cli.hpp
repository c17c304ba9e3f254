#pragma once

/**
 * Command-line front end. `run` is the whole program minus process setup,
 * so tests drive it with string vectors and capture both streams.
 *
 * Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal
 * invariant failure.
 */

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobordism.hpp"
#include "contfrac.hpp"
#include "json.hpp"
#include "lens.hpp"
#include "plumbing.hpp"
#include "surgery.hpp"
#include "twobridge.hpp"

namespace cobkit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInternal = 3 };

inline constexpr Int kDefaultMaxN = 1000;

// Sweep cap from COBKIT_MAX_N, default 1000.
inline Int max_sweep() {
    const char* env = std::getenv("COBKIT_MAX_N");
    if (env == nullptr || *env == '\0') return kDefaultMaxN;
    try {
        std::size_t pos = 0;
        Int v = std::stoll(env, &pos);
        if (pos == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw domain_error(std::string("COBKIT_MAX_N must be a positive integer, got '") + env + "'");
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline std::string verdict_name(OrderVerdict v) { return v == OrderVerdict::infinite ? "infinite" : "unknown"; }

inline void print_bounds_text(std::ostream& out, const MBounds& b) {
    out << "  m >= " << b.m_lower.to_decimal() << "\n";
    out << "  mbar <= " << b.mbar_upper.to_decimal() << "\n";
    if (b.m_exact) out << "  m = " << b.m_exact->to_decimal() << "\n";
    if (b.mbar_exact) out << "  mbar = " << b.mbar_exact->to_decimal() << "\n";
    if (b.rokhlin) out << "  rokhlin: " << b.rokhlin->value() << "\n";
}

struct Options {
    bool json = false;
    bool csv = false;

    // lens / cf / twobridge / genus-bound
    std::vector<Int> pair;
    std::string cf_text;
    std::string eval_text;
    bool positive = false;

    // plumbing / montesinos
    std::vector<Int> triple;

    // surgery-check / genus-bound
    std::optional<Int> h;
    std::optional<Int> rokhlin;
    std::vector<Int> lens;
    std::optional<Int> det;
    std::string m_lower;

    Int alpha_max = 0;
};

inline int cmd_lens(const Options& o, std::ostream& out) {
    const LensSpace lens = LensSpace::make(o.pair.at(0), o.pair.at(1));
    std::optional<AdmissibleCF> cf;
    if (!o.cf_text.empty()) cf = parse_cf(o.cf_text);
    const LensOrder order = classify_order(lens, cf);
    const LensBounds& lb = order.bounds;
    if (o.json) {
        out << to_json(lb.bounds).dump(2) << "\n";
        return kOk;
    }
    out << lens.name() << "\n";
    out << "  decomposition: " << format_cf(lb.cf);
    if (lb.mirrored) out << " (of " << lens.mirror().name() << ", orientation reversed)";
    out << "\n";
    print_bounds_text(out, lb.bounds);
    out << "  order: " << verdict_name(order.verdict);
    if (!order.certificates.empty()) {
        out << " (";
        for (std::size_t i = 0; i < order.certificates.size(); ++i) out << (i ? "; " : "") << order.certificates[i];
        out << ")";
    }
    out << "\n";
    if (order.annotation) out << "  note: " << order.annotation->note << "\n";
    return kOk;
}

inline int cmd_cf(const Options& o, std::ostream& out) {
    if (!o.eval_text.empty()) {
        auto terms = parse_cf_terms(o.eval_text);
        Rational v = eval_cf(terms.a, terms.b);
        if (o.json) {
            out << json{{"cf", format_cf(terms.a, terms.b)}, {"value", v.to_fraction()}}.dump(2) << "\n";
        } else {
            out << format_cf(terms.a, terms.b) << " = " << v.to_fraction() << "\n";
        }
        return kOk;
    }
    detail::require(o.pair.size() == 2, "cf: give ALPHA BETA or --eval TEXT");
    std::optional<AdmissibleCF> cf;
    if (o.positive) {
        cf = find_positive_cf(o.pair[0], o.pair[1]);
    } else {
        cf = find_admissible_cf(o.pair[0], o.pair[1]);
    }
    if (o.json) {
        out << json{{"alpha", o.pair[0]}, {"beta", o.pair[1]}, {"cf", cf ? json(format_cf(*cf)) : json(nullptr)}}.dump(2)
            << "\n";
    } else {
        out << (cf ? format_cf(*cf) : std::string("none (the floor expansion leaves the positive range)")) << "\n";
    }
    return kOk;
}

inline int cmd_twobridge(const Options& o, std::ostream& out) {
    AdmissibleCF cf;
    if (!o.cf_text.empty()) {
        cf = parse_cf(o.cf_text);
    } else {
        detail::require(o.pair.size() == 2, "twobridge: give a decomposition [a1,2b1,...] or ALPHA BETA");
        cf = find_admissible_cf(o.pair[0], o.pair[1]);
    }
    const FourPlat plat(cf);
    const auto odd = odd_counts(plat);
    std::optional<GenusEstimate> genus;
    if (plat.is_knot()) genus = slice_genus_upper(plat);
    if (o.json) {
        json j{{"cf", format_cf(cf)},
               {"alpha", cf.alpha},
               {"beta", cf.beta},
               {"is_knot", plat.is_knot()},
               {"signature", signature(plat)},
               {"determinant", determinant(plat)},
               {"o_plus", odd.o_plus},
               {"o_minus", odd.o_minus},
               {"slice_genus_upper", genus ? json(genus->genus) : json(nullptr)}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "S(" << cf.alpha << "," << cf.beta << ") = P" << format_cf(cf) << "\n";
    out << "  knot: " << (plat.is_knot() ? "yes" : "no (two components)") << "\n";
    out << "  signature: " << signature(plat) << "\n";
    out << "  determinant: " << determinant(plat) << "\n";
    out << "  o+ = " << odd.o_plus << ", o- = " << odd.o_minus << "\n";
    if (genus) {
        out << "  slice genus <= " << genus->genus << " (" << genus->positive_changes << " positive, "
            << genus->negative_changes << " negative crossing changes to a genus " << genus->seifert_genus
            << " surface)\n";
    }
    return kOk;
}

inline int cmd_plumbing(const Options& o, std::ostream& out) {
    const MpqrTriple t = MpqrTriple::make(o.triple.at(0), o.triple.at(1), o.triple.at(2));
    const TpqrInvariants inv = tpqr_invariants(t);
    const MBounds b = sigma_pqr_bounds(t);
    if (o.json) {
        json j = to_json(inv);
        j["bounds"] = to_json(b);
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "T_{" << t.p << "," << t.q << "," << t.r << "}\n";
    out << "  inertia: (" << inv.inertia.positive << ", " << inv.inertia.negative << ", " << inv.inertia.zero << ")\n";
    out << "  |det| = " << inv.det.str() << "\n";
    out << "  signature: " << inv.sigma << "\n";
    out << "  rank: " << inv.rank << "\n";
    out << "Sigma_{" << t.p << "," << t.q << "," << t.r << "}\n";
    print_bounds_text(out, b);
    out << "  order: " << verdict_name(infinite_order_certificate(b).verdict) << "\n";
    return kOk;
}

inline int cmd_montesinos(const Options& o, std::ostream& out) {
    const MpqrTriple t = MpqrTriple::make(o.triple.at(0), o.triple.at(1), o.triple.at(2));
    const MontesinosInvariants inv = montesinos_invariants(t);
    if (o.json) {
        out << json{{"slice_genus", inv.slice_genus}, {"unknotting", inv.unknotting}, {"signature", inv.signature}}.dump(2)
            << "\n";
        return kOk;
    }
    out << "m(2;(" << t.p << "," << t.p - 1 << "),(" << t.q << "," << t.q - 1 << "),(" << t.r << "," << t.r - 1
        << "))\n";
    out << "  slice genus: " << inv.slice_genus << "\n";
    out << "  unknotting number: " << inv.unknotting << "\n";
    out << "  signature: " << inv.signature << "\n";
    return kOk;
}

// h and R from --h/--rokhlin, or from --lens when those are absent.
inline std::pair<Int, RokhlinClass> sphere_data(const Options& o, std::optional<LensSpace>& lens) {
    if (!o.lens.empty()) lens = LensSpace::make(o.lens.at(0), o.lens.at(1));
    std::optional<Int> h = o.h;
    std::optional<RokhlinClass> r;
    if (o.rokhlin) r = RokhlinClass(*o.rokhlin);
    if (lens) {
        if (h) detail::require(*h == lens->alpha, "--h disagrees with the lens space order");
        if (r) detail::require(*r == rokhlin(*lens), "--rokhlin disagrees with the lens space Rokhlin invariant");
        h = lens->alpha;
        r = rokhlin(*lens);
    }
    detail::require(h && r, "give --h and --rokhlin, or --lens ALPHA BETA");
    return {*h, *r};
}

inline int cmd_surgery_check(const Options& o, std::ostream& out) {
    SurgeryQuery q;
    auto [h, r] = sphere_data(o, q.lens);
    q.h = h;
    q.rokhlin = r;
    q.unknotting_one_det = o.det;
    const ObstructionReport report = surgery_check(q);
    if (o.json) {
        out << to_json(report).dump(2) << "\n";
        return kOk;
    }
    out << "h = " << h << ", R = " << r.value() << "\n";
    for (const auto& t : report.tests)
        out << "  " << t.name << ": " << (t.verdict == TestVerdict::pass ? "pass" : "obstructed") << " (" << t.detail
            << ")\n";
    out << "conclusion: " << conclusion_name(report) << "\n";
    return kOk;
}

inline int cmd_genus_bound(const Options& o, std::ostream& out) {
    std::optional<LensSpace> lens;
    auto [h, r] = sphere_data(o, lens);
    Rational m_lower;
    if (!o.m_lower.empty()) {
        m_lower = Rational::parse(o.m_lower);
    } else {
        detail::require(lens.has_value(), "genus-bound: give --m-lower or --lens");
        std::optional<AdmissibleCF> cf;
        if (!o.cf_text.empty()) cf = parse_cf(o.cf_text);
        m_lower = lens_bounds(*lens, cf).bounds.m_lower;
    }
    const Rational bound = slice_genus_lower(h, r, m_lower);
    if (o.json) {
        out << json{{"h", h}, {"rokhlin", r.value()}, {"m_lower", m_lower.to_fraction()}, {"slice_genus_lower",
                                                                                          bound.to_fraction()}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "h = " << h << ", R = " << r.value() << ", m >= " << m_lower.to_decimal() << "\n";
    out << "  slice genus of any knot with integral surgery giving it >= " << bound.to_decimal() << "\n";
    return kOk;
}

inline int cmd_table1(const Options& o, std::ostream& out) {
    const auto rows = table1();
    if (o.json) {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back(json{{"alpha", row.lens.alpha},
                               {"beta", row.lens.beta},
                               {"m_lower", row.m_lower.to_fraction()},
                               {"mbar_upper", row.mbar_upper.to_fraction()},
                               {"cf", format_cf(row.cf)},
                               {"order", row.order}});
        out << arr.dump(2) << "\n";
        return kOk;
    }
    if (o.csv) {
        out << "alpha,beta,m_lower,mbar_upper,cf,order\n";
        for (const auto& row : rows)
            out << row.lens.alpha << "," << row.lens.beta << "," << row.m_lower.to_decimal() << ","
                << row.mbar_upper.to_decimal() << "," << csv_quote(format_cf(row.cf)) << "," << row.order << "\n";
        return kOk;
    }
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.insert(0, w - s.size(), ' ');
        return s;
    };
    out << pad("L(a,b)", 8) << pad("m >=", 7) << pad("mbar <=", 9) << pad("decomposition", 18) << pad("order", 7)
        << "\n";
    for (const auto& row : rows) {
        std::string name = "(" + std::to_string(row.lens.alpha) + "," + std::to_string(row.lens.beta) + ")";
        out << pad(name, 8) << pad(row.m_lower.to_decimal(), 7) << pad(row.mbar_upper.to_decimal(), 9)
            << pad(format_cf(row.cf), 18) << pad(row.order, 7) << "\n";
    }
    return kOk;
}

inline int cmd_scan(const Options& o, std::ostream& out) {
    const Int cap = max_sweep();
    if (o.alpha_max > cap)
        throw resource_error("scan: --alpha-max " + std::to_string(o.alpha_max) + " exceeds COBKIT_MAX_N = " +
                             std::to_string(cap));
    out << "alpha,beta,m_lower,mbar_upper,rokhlin,cf,order\n";
    for (Int alpha = 3; alpha <= o.alpha_max; alpha += 2) {
        for (Int beta = 1; beta < alpha; ++beta) {
            if (gcd(alpha, beta) != 1) continue;
            const LensOrder order = classify_order(LensSpace::make(alpha, beta));
            const LensBounds& lb = order.bounds;
            out << alpha << "," << beta << "," << lb.bounds.m_lower.to_decimal() << ","
                << lb.bounds.mbar_upper.to_decimal() << "," << lb.bounds.rokhlin->value() << ","
                << csv_quote((lb.mirrored ? "-" : "") + format_cf(lb.cf)) << "," << order_label(order) << "\n";
        }
    }
    return kOk;
}

inline void configure(CLI::App& app, Options& o) {
    app.require_subcommand(1, 1);
    // "--h" is an option below, so help keeps only its long form.
    app.set_help_flag("--help", "print this help and exit");

    auto* lens = app.add_subcommand("lens", "bounds, Rokhlin invariant and order of L(alpha,beta)");
    lens->add_option("alpha_beta", o.pair, "ALPHA BETA")->expected(2)->required();
    lens->add_option("--cf", o.cf_text, "decomposition to use, e.g. [2,4,-1]");
    lens->add_flag("--json", o.json);

    auto* cf = app.add_subcommand("cf", "admissible continued fraction of alpha/beta");
    cf->add_option("alpha_beta", o.pair, "ALPHA BETA")->expected(2);
    cf->add_option("--eval", o.eval_text, "evaluate [a1,2b1,...,an]");
    cf->add_flag("--positive", o.positive, "all-positive decomposition only");
    cf->add_flag("--json", o.json);

    auto* tb = app.add_subcommand("twobridge", "signature, determinant and slice genus bound of a 4-plat");
    tb->add_option("cf", o.cf_text, "[a1,2b1,...,an]");
    tb->add_option("--target", o.pair, "ALPHA BETA instead of a decomposition")->expected(2);
    tb->add_flag("--json", o.json);

    auto* pl = app.add_subcommand("plumbing", "invariants of T_{p,q,r} and Sigma_{p,q,r}");
    pl->add_option("pqr", o.triple, "P Q R")->expected(3)->required();
    pl->add_flag("--json", o.json);

    auto* mo = app.add_subcommand("montesinos", "slice genus of m(2;(p,p-1),(q,q-1),(r,r-1))");
    mo->add_option("pqr", o.triple, "P Q R")->expected(3)->required();
    mo->add_flag("--json", o.json);

    auto* sc = app.add_subcommand("surgery-check", "obstructions to integral surgery on a knot");
    sc->add_option("--h", o.h, "order of H_1");
    sc->add_option("--rokhlin", o.rokhlin, "Rokhlin invariant");
    sc->add_option("--lens", o.lens, "ALPHA BETA: take h and R from L(alpha,beta)")->expected(2);
    sc->add_option("--unknotting-one-det", o.det, "determinant of an unknotting-number-one knot it covers");
    sc->add_flag("--json", o.json);

    auto* gb = app.add_subcommand("genus-bound", "slice genus lower bound for surgery descriptions");
    gb->add_option("--h", o.h, "order of H_1");
    gb->add_option("--rokhlin", o.rokhlin, "Rokhlin invariant");
    gb->add_option("--m-lower", o.m_lower, "certified lower bound for m, as p/q");
    gb->add_option("--lens", o.lens, "ALPHA BETA: take h, R and m from L(alpha,beta)")->expected(2);
    gb->add_option("--cf", o.cf_text, "decomposition used for the lens bound");
    gb->add_flag("--json", o.json);

    auto* t1 = app.add_subcommand("table1", "bounds for lens spaces of odd order up to 13");
    t1->add_flag("--csv", o.csv);
    t1->add_flag("--json", o.json);

    auto* scan = app.add_subcommand("scan", "CSV sweep over L(alpha,beta), alpha odd");
    scan->add_option("--alpha-max", o.alpha_max, "largest alpha")->required();
    scan->add_flag("--csv", o.csv, "CSV output (the only format)");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cobkit: Z/2-homology cobordism bounds for lens spaces, plumbings and surgeries", "cobkit"};
    Options o;
    configure(app, o);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        if (verb == "lens") return cmd_lens(o, out);
        if (verb == "cf") return cmd_cf(o, out);
        if (verb == "twobridge") return cmd_twobridge(o, out);
        if (verb == "plumbing") return cmd_plumbing(o, out);
        if (verb == "montesinos") return cmd_montesinos(o, out);
        if (verb == "surgery-check") return cmd_surgery_check(o, out);
        if (verb == "genus-bound") return cmd_genus_bound(o, out);
        if (verb == "table1") return cmd_table1(o, out);
        if (verb == "scan") return cmd_scan(o, out);
        err << "error: unknown command " << verb << "\n" << app.help();
        return kUsage;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace cobkit::cli
