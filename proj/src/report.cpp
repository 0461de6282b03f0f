#include "ulrich/report.hpp"

#include <fstream>
#include <sstream>

#include "ulrich/cohomology.hpp"
#include "ulrich/riemann_roch.hpp"
#include "ulrich/ulrich_check.hpp"

namespace ulrich {

namespace {

json manifest_for(const std::string& command, const json& config) {
    return json{{"command", command}, {"config", config}, {"version", kToolVersion}};
}

struct Check {
    std::string name;
    bool pass = false;
};

RunOutput finish(const std::string& command, const json& config, json results,
                 const std::vector<Check>& checks) {
    json summary;
    long long passed = 0, failed = 0;
    json list = json::array();
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"pass", c.pass}});
        (c.pass ? passed : failed)++;
    }
    summary["checks"] = list;
    summary["passed"] = passed;
    summary["failed"] = failed;

    RunOutput out;
    out.doc = json{{"manifest", manifest_for(command, config)},
                   {"results", std::move(results)},
                   {"summary", summary}};
    out.exit_code = failed == 0 ? 0 : 1;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long to_int(const std::string& s) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw UsageError("trailing characters in integer: " + s);
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

VarietyModel parse_model(const std::string& s) {
    if (s == "p1") return VarietyModel::p1();
    if (s == "quadric") return VarietyModel::quadric();
    if (s.size() >= 2 && s[0] == 'p') {
        try {
            return VarietyModel::pn(static_cast<int>(to_int(s.substr(1))));
        } catch (const std::exception&) {
        }
    }
    throw UsageError("unknown model '" + s + "' (expected p1, p2, ..., or quadric)");
}

BundleClass parse_class(const VarietyModel& m, const std::string& s) {
    const auto parts = split(s, ',');
    if (static_cast<int>(parts.size()) != m.class_components())
        throw UsageError("class '" + s + "' has wrong number of components for the model");
    if (parts.size() == 1) return BundleClass(m, to_int(parts[0]));
    return BundleClass(m, to_int(parts[0]), to_int(parts[1]));
}

SheafExpr parse_sheaf(const VarietyModel& m, const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw UsageError("sheaf grammar: line:<c> | syz:<L>:<t> | dualsyz:<L>:<t> | sum:<e>;<e>");
    const std::string head = s.substr(0, colon);
    const std::string rest = s.substr(colon + 1);
    if (head == "line") return SheafExpr::line(parse_class(m, rest));
    if (head == "syz" || head == "dualsyz") {
        const auto parts = split(rest, ':');
        if (parts.size() != 2)
            throw UsageError("sheaf grammar: " + head + ":<L>:<t>");
        const auto L = parse_class(m, parts[0]);
        const auto t = parse_class(m, parts[1]);
        if (!very_ample(L, m))
            throw UsageError("L = " + parts[0] + " is not very ample on the model");
        return head == "syz" ? SheafExpr::syzygy(L, t) : SheafExpr::dual_syzygy(L, t);
    }
    if (head == "sum") {
        std::vector<SheafExpr> parts;
        for (const auto& p : split(rest, ';')) parts.push_back(parse_sheaf(m, trim(p)));
        if (parts.empty()) throw UsageError("sum needs at least one summand");
        return SheafExpr::sum(std::move(parts));
    }
    throw UsageError("unknown sheaf kind '" + head + "'");
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    std::map<std::string, std::string> out;
    std::string line, section;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line without '=': " + line);
        const std::string key = trim(line.substr(0, eq));
        out[section.empty() ? key : section + "." + key] = trim(line.substr(eq + 1));
    }
    return out;
}

namespace {

void apply_range(const std::map<std::string, std::string>& cfg,
                 const std::string& section, const std::string& name, IntRange& r) {
    auto it = cfg.find(section + "." + name + "_min");
    if (it != cfg.end()) r.lo = to_int(it->second);
    it = cfg.find(section + "." + name + "_max");
    if (it != cfg.end()) r.hi = to_int(it->second);
}

}  // namespace

SearchConfig search_config_from(const std::map<std::string, std::string>& cfg,
                                const std::string& section, SearchConfig d) {
    apply_range(cfg, section, "k", d.k);
    apply_range(cfg, section, "a", d.a);
    apply_range(cfg, section, "n", d.n);
    apply_range(cfg, section, "m", d.m);
    apply_range(cfg, section, "g", d.g);
    apply_range(cfg, section, "bideg", d.bideg);
    apply_range(cfg, section, "l2", d.L2);
    return d;
}

SweepBounds sweep_bounds_from(const std::map<std::string, std::string>& cfg,
                              SweepBounds d) {
    auto get = [&](const char* key, long long& v) {
        auto it = cfg.find(std::string("sweep.") + key);
        if (it != cfg.end()) v = to_int(it->second);
    };
    get("p1_m_max", d.p1_m_max);
    get("p2_deg_max", d.p2_deg_max);
    get("p3_deg_max", d.p3_deg_max);
    get("quad_comp_max", d.quad_comp_max);
    get("k_min", d.k_lo);
    get("k_max", d.k_hi);
    get("a_min", d.a_lo);
    get("a_max", d.a_hi);
    return d;
}

json solution_to_json(const ClassificationSolution& s) {
    json tuple;
    if (s.g == -1)
        tuple = json::array({s.n, s.m, s.k, s.a});  // surface: (n, L2, k, a)
    else
        tuple = json::array({s.n, s.m, s.g, s.k, s.a});
    return json{{"family", family_name(s.family)}, {"tuple", tuple}};
}

json ulrich_report_to_json(const UlrichReport& r) {
    return json{{"verdict", r.verdict},
                {"table", r.table},
                {"h0E", r.h0E},
                {"rank_times_degree", r.rank_times_degree},
                {"notes", r.notes}};
}

RunOutput cmd_check_ulrich(const VarietyModel& m, const SheafExpr& E,
                           const BundleClass& H, const json& config_snapshot) {
    const auto rep = is_ulrich(m, E, H);
    json results{{"sheaf", E.str()}, {"H", H.str()}, {"report", ulrich_report_to_json(rep)}};
    std::vector<Check> checks;
    if (rep.verdict)
        checks.push_back({"h0_equals_rank_times_degree", check_h0_equals_rm(rep)});
    return finish("check-ulrich", config_snapshot, results, checks);
}

RunOutput cmd_coh(const VarietyModel& m, const SheafExpr& E, const json& config_snapshot) {
    const auto v = cohomology(m, E);
    const long long chi = chi_expr(m, E);
    json results{{"sheaf", E.str()}, {"h", v.h}, {"euler", v.euler()}, {"chi", chi}};
    std::vector<Check> checks{{"euler_equals_chi", v.euler() == chi}};
    return finish("coh", config_snapshot, results, checks);
}

namespace {

json solutions_json(const std::vector<ClassificationSolution>& sols) {
    json arr = json::array();
    for (const auto& s : sols) arr.push_back(solution_to_json(s));
    return arr;
}

long long count_unexpected(const std::vector<ClassificationSolution>& sols) {
    long long c = 0;
    for (const auto& s : sols) c += s.family == Family::Unexpected;
    return c;
}

struct Prop52ScanResult {
    long long checked = 0;
    long long both_hold = 0;
};

// The two necessary polarization conditions only depend on (n, L.H, H^2, H.K, k);
// every valid table with L.H > 0 must fail at least one of them.
Prop52ScanResult prop52_scan(long long entry_max, const IntRange& nr, const IntRange& kr) {
    Prop52ScanResult res;
    IntersectionTable t;
    t.L2 = 2;
    t.LK = 0;
    for (t.n = std::max(nr.lo, 2LL); t.n <= nr.hi; ++t.n)
        for (t.LH = 1; t.LH <= entry_max; ++t.LH)
            for (t.H2 = 1; t.H2 <= entry_max; ++t.H2)
                for (t.HK = -entry_max; t.HK <= entry_max; ++t.HK) {
                    if ((t.H2 + t.HK) % 2 != 0) continue;
                    for (long long k = kr.lo; k <= kr.hi; ++k) {
                        ++res.checked;
                        if (check_prop52(t, k, true) == Prop52Verdict::Holds &&
                            check_prop52(t, k, false) == Prop52Verdict::Holds)
                            ++res.both_hold;
                    }
                }
    return res;
}

// On the quadric, every (L, H, k) the 2kL = 3H + K obstruction flags must get an
// exact-engine verdict of false.
struct Cor54Result {
    long long flagged = 0;
    long long engine_disagreements = 0;
    bool example_instance_flagged = false;
};

Cor54Result cor54_sweep(long long comp_max, long long k_max) {
    Cor54Result res;
    const auto q = VarietyModel::quadric();
    for (long long la = 1; la <= comp_max; ++la)
        for (long long lb = 1; lb <= comp_max; ++lb)
            for (long long ha = 1; ha <= comp_max; ++ha)
                for (long long hb = 1; hb <= comp_max; ++hb)
                    for (long long k = -k_max; k <= k_max; ++k) {
                        const BundleClass L(q, la, lb), H(q, ha, hb);
                        if (!check_dual_ulrich_obstruction(L, H, k)) continue;
                        ++res.flagged;
                        if (la == 1 && lb == 4 && ha == 2 && hb == 6 && k == 2)
                            res.example_instance_flagged = true;
                        const auto E = SheafExpr::dual_syzygy(L, scale(k + 1, L));
                        if (is_ulrich(q, E, H).verdict) ++res.engine_disagreements;
                    }
    return res;
}

std::vector<ClassificationSolution> expected_curves_dual(const SearchConfig& c) {
    std::vector<ClassificationSolution> out;
    for (long long k = c.k.lo; k <= c.k.hi; ++k) {
        if (c.a.contains(k + 2) && c.n.contains(2) && c.m.contains(2) && c.g.contains(0))
            out.push_back({Family::CurveConic, 2, 2, 0, k, k + 2});
        if (c.a.contains(k + 3) && c.n.contains(1) && c.m.contains(1) && c.g.contains(0))
            out.push_back({Family::CurveLine, 1, 1, 0, k, k + 3});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClassificationSolution> expected_curves_syz(const SearchConfig& c) {
    std::vector<ClassificationSolution> out;
    for (long long k = std::max(c.k.lo, 2LL); k <= c.k.hi; ++k) {
        if (!c.a.contains(k - 1)) continue;
        for (long long n = std::max(c.n.lo, 1LL); n <= c.n.hi; ++n)
            if (c.m.contains(n) && c.g.contains(0))
                out.push_back({Family::NormalRational, n, n, 0, k, k - 1});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RunOutput cmd_classify(const std::string& sub, const SearchConfig& cfg, bool diagnostic,
                       const json& config_snapshot) {
    json results;
    std::vector<Check> checks;

    if (sub == "curves-dual") {
        const auto sols = solve_curve_dualM(cfg);
        results["solutions"] = solutions_json(sols);
        results["unexpected"] = count_unexpected(sols);
        checks.push_back({"no_unexpected_solutions", count_unexpected(sols) == 0});
    } else if (sub == "curves-syz") {
        const auto sols = solve_curve_M(cfg);
        results["solutions"] = solutions_json(sols);
        results["unexpected"] = count_unexpected(sols);
        checks.push_back({"no_unexpected_solutions", count_unexpected(sols) == 0});
    } else if (sub == "surfaces-dual") {
        const auto res = solve_surface_dualM(cfg, !diagnostic);
        results["solutions"] = solutions_json(res.solutions);
        results["unexpected"] = count_unexpected(res.solutions);
        if (diagnostic) results["raw_extras"] = solutions_json(res.raw_extras);
        checks.push_back({"no_unexpected_solutions", count_unexpected(res.solutions) == 0});
    } else if (sub == "p1xp1-example") {
        const auto res = example_p1xp1_search(cfg);
        json sols = json::array();
        for (const auto& s : res.solutions) sols.push_back({s[0], s[1], s[2]});
        results["solutions"] = sols;
        results["per_equation_counts"] =
            json{{"c1", res.c1_count}, {"c2", res.c2_count}, {"chi", res.chi_count}};
        checks.push_back({"incompatible", res.solutions.empty()});
    } else if (sub == "prop52-scan") {
        const auto res = prop52_scan(20, cfg.n, cfg.k);
        results["checked"] = res.checked;
        results["both_hold"] = res.both_hold;
        checks.push_back({"never_simultaneous", res.both_hold == 0});
    } else {
        throw UsageError("unknown classify subcommand '" + sub + "'");
    }
    return finish("classify " + sub, config_snapshot, results, checks);
}

RunOutput cmd_verify_theorem(const SearchConfig& curve_cfg, const SearchConfig& surface_cfg,
                             const SearchConfig& quad_cfg, const SweepBounds& bounds,
                             const json& config_snapshot) {
    json results;
    std::vector<Check> checks;

    // curve classifications match the two families exactly
    {
        const auto sols = solve_curve_dualM(curve_cfg);
        const auto expected = expected_curves_dual(curve_cfg);
        results["curves_dual"] = {{"solutions", solutions_json(sols)},
                                  {"expected_count", expected.size()}};
        checks.push_back({"curves_dual_exact_families", sols == expected});
    }
    {
        const auto sols = solve_curve_M(curve_cfg);
        const auto expected = expected_curves_syz(curve_cfg);
        results["curves_syz"] = {{"solutions", solutions_json(sols)},
                                 {"expected_count", expected.size()}};
        checks.push_back({"curves_syz_exact_family", sols == expected});
    }
    // surface classification pins (n, L2, k, a) = (2, 1, 0, 2)
    {
        const auto res = solve_surface_dualM(surface_cfg);
        results["surfaces_dual"] = {{"solutions", solutions_json(res.solutions)}};
        const bool unique = res.solutions.size() == 1 &&
                            res.solutions[0].n == 2 && res.solutions[0].m == 1 &&
                            res.solutions[0].k == 0 && res.solutions[0].a == 2;
        checks.push_back({"surfaces_dual_unique_solution", unique});
    }
    // the P^1 x P^1 example system is incompatible
    {
        const auto res = example_p1xp1_search(quad_cfg);
        results["p1xp1_example"] = {
            {"solutions", res.solutions.size()},
            {"per_equation_counts",
             json{{"c1", res.c1_count}, {"c2", res.c2_count}, {"chi", res.chi_count}}}};
        checks.push_back({"p1xp1_example_empty", res.solutions.empty()});
    }
    // the two polarization conditions never hold simultaneously
    {
        const auto res = prop52_scan(20, IntRange{2, 20}, IntRange{-20, 20});
        results["prop52_scan"] = {{"checked", res.checked}, {"both_hold", res.both_hold}};
        checks.push_back({"cor53_never_simultaneous", res.both_hold == 0});
    }
    // every quadric tuple the 2kL = 3H + K obstruction flags is non-Ulrich
    {
        const auto res = cor54_sweep(6, 6);
        results["cor54_sweep"] = {{"flagged", res.flagged},
                                  {"engine_disagreements", res.engine_disagreements},
                                  {"example_instance_flagged", res.example_instance_flagged}};
        checks.push_back({"cor54_flags_confirmed",
                          res.engine_disagreements == 0 && res.example_instance_flagged});
    }
    // direct Ulrich witnesses
    {
        const auto p2 = VarietyModel::pn(2);
        const BundleClass L1(p2, 1);
        const auto rep = is_ulrich(p2, SheafExpr::dual_syzygy(L1, BundleClass(p2, 1)),
                                   BundleClass(p2, 2));
        results["tp2_witness"] = ulrich_report_to_json(rep);
        checks.push_back({"tp2_ulrich_with_h0_8",
                          rep.verdict && rep.h0E == 8 && rep.rank_times_degree == 8});

        const auto p1 = VarietyModel::p1();
        bool family_ok = true;
        for (long long n = 1; n <= 6 && family_ok; ++n)
            for (long long k = 2; k <= 6 && family_ok; ++k) {
                const BundleClass L(p1, n);
                const auto E = SheafExpr::syzygy(L, scale(k - 1, L));
                family_ok = is_ulrich(p1, E, scale(k - 1, L)).verdict;
            }
        checks.push_back({"p1_syzygy_family_ulrich", family_ok});

        const auto exc = is_ulrich(
            p1, SheafExpr::dual_syzygy(BundleClass(p1, 1), BundleClass(p1, -1)),
            BundleClass(p1, 1));
        checks.push_back({"p1_exceptional_case_ulrich", exc.verdict});
    }
    // exclusivity sweep with h^0 laws and Euler/split consistency
    {
        const auto sweep = run_exclusivity_sweep(bounds);
        results["exclusivity_sweep"] = {
            {"points", sweep.points},
            {"exclusivity_mismatches", sweep.exclusivity_mismatches},
            {"h0_law_violations", sweep.h0_law_violations},
            {"chi_mismatches", sweep.chi_mismatches},
            {"split_mismatches", sweep.split_mismatches}};
        checks.push_back({"exclusivity_sweep_clean", sweep.exclusivity_mismatches.empty()});
        checks.push_back({"h0_laws_hold", sweep.h0_law_violations.empty()});
        checks.push_back({"euler_consistency", sweep.chi_mismatches.empty()});
        checks.push_back({"p1_split_type_agreement", sweep.split_mismatches.empty()});
    }
    // hyperplane-restriction witness and direct-sum closure
    {
        const auto w = restriction_witness();
        results["restriction_witness"] = {{"split_type", w.split_type},
                                          {"restriction_is_ulrich", w.restriction_is_ulrich},
                                          {"sum_closure_holds", w.sum_closure_holds}};
        checks.push_back({"restriction_witness_ok", w.ok()});
    }

    return finish("verify-theorem", config_snapshot, results, checks);
}

std::string render_markdown(const json& doc) {
    std::ostringstream os;
    os << "# " << doc.at("manifest").at("command").get<std::string>() << " report\n\n";
    os << "tool version " << doc.at("manifest").at("version").get<std::string>() << "\n\n";
    os << "## Summary\n\n";
    for (const auto& c : doc.at("summary").at("checks")) {
        os << "- [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] "
           << c.at("name").get<std::string>() << "\n";
    }
    os << "\n## Results\n\n```json\n" << doc.at("results").dump(2) << "\n```\n";
    return os.str();
}

}  // namespace ulrich
