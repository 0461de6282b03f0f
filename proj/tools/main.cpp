#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ulrich/report.hpp"

namespace {

using ulrich::json;

struct RangeFlags {
    std::optional<long long> k_min, k_max, a_min, a_max, n_min, n_max;
    std::optional<long long> m_min, m_max, g_min, g_max, l2_min, l2_max;
    std::optional<long long> bideg_min, bideg_max;

    void attach(CLI::App* app) {
        app->add_option("--k-min", k_min);
        app->add_option("--k-max", k_max);
        app->add_option("--a-min", a_min);
        app->add_option("--a-max", a_max);
        app->add_option("--n-min", n_min);
        app->add_option("--n-max", n_max);
        app->add_option("--m-min", m_min);
        app->add_option("--m-max", m_max);
        app->add_option("--g-min", g_min);
        app->add_option("--g-max", g_max);
        app->add_option("--l2-min", l2_min);
        app->add_option("--l2-max", l2_max);
        app->add_option("--bideg-min", bideg_min);
        app->add_option("--bideg-max", bideg_max);
    }

    void apply(ulrich::SearchConfig& c) const {
        auto set = [](ulrich::IntRange& r, const std::optional<long long>& lo,
                      const std::optional<long long>& hi) {
            if (lo) r.lo = *lo;
            if (hi) r.hi = *hi;
        };
        set(c.k, k_min, k_max);
        set(c.a, a_min, a_max);
        set(c.n, n_min, n_max);
        set(c.m, m_min, m_max);
        set(c.g, g_min, g_max);
        set(c.L2, l2_min, l2_max);
        set(c.bideg, bideg_min, bideg_max);
    }
};

json range_json(const ulrich::IntRange& r) { return json::array({r.lo, r.hi}); }

json search_config_json(const ulrich::SearchConfig& c) {
    return json{{"k", range_json(c.k)},     {"a", range_json(c.a)},
                {"n", range_json(c.n)},     {"m", range_json(c.m)},
                {"g", range_json(c.g)},     {"l2", range_json(c.L2)},
                {"bideg", range_json(c.bideg)}};
}

json sweep_bounds_json(const ulrich::SweepBounds& b) {
    return json{{"p1_m_max", b.p1_m_max},     {"p2_deg_max", b.p2_deg_max},
                {"p3_deg_max", b.p3_deg_max}, {"quad_comp_max", b.quad_comp_max},
                {"k", json::array({b.k_lo, b.k_hi})},
                {"a", json::array({b.a_lo, b.a_hi})}};
}

void widen(ulrich::SearchConfig& c) {
    auto w = [](ulrich::IntRange& r) {
        if (r.lo < 0) r.lo *= 2;
        r.hi *= 2;
    };
    w(c.k);
    w(c.a);
    w(c.n);
    w(c.m);
    w(c.g);
    w(c.L2);
    w(c.bideg);
}

int emit(const ulrich::RunOutput& out, const std::string& out_path,
         const std::string& format, const std::string& golden_path) {
    const std::string payload = format == "md" ? ulrich::render_markdown(out.doc)
                                               : out.doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ulrich::UsageError("cannot write to " + out_path);
        f << payload;
    }
    if (!golden_path.empty()) {
        std::ifstream g(golden_path, std::ios::binary);
        if (!g) throw ulrich::UsageError("cannot open golden file " + golden_path);
        std::string expected((std::istreambuf_iterator<char>(g)),
                             std::istreambuf_iterator<char>());
        if (expected != payload) {
            std::cerr << "golden mismatch against " << golden_path << "\n";
            return 1;
        }
    }
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ulrich checks for twisted syzygy bundles"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json";
    app.add_option("--config", config_path, "flat key-value config file with [section] headers");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--format", format, "json (default) or md")
        ->check(CLI::IsMember({"json", "md"}));

    auto* cu = app.add_subcommand("check-ulrich", "direct Ulrich test of a sheaf expression");
    cu->fallthrough();
    std::string cu_model, cu_sheaf, cu_H;
    cu->add_option("--model", cu_model, "p1, p2, p3, ..., or quadric")->required();
    cu->add_option("--sheaf", cu_sheaf, "line:<c> | syz:<L>:<t> | dualsyz:<L>:<t> | sum:<e>;<e>")
        ->required();
    cu->add_option("--H", cu_H, "polarization class")->required();

    auto* co = app.add_subcommand("coh", "exact cohomology of a sheaf expression");
    co->fallthrough();
    std::string co_model, co_sheaf;
    co->add_option("--model", co_model)->required();
    co->add_option("--sheaf", co_sheaf)->required();

    auto* cl = app.add_subcommand("classify", "exhaustive solvers for the numerical conditions");
    cl->fallthrough();
    std::string cl_sub;
    bool cl_diagnostic = false;
    cl->add_option("subcommand", cl_sub,
                   "curves-dual | curves-syz | surfaces-dual | p1xp1-example | prop52-scan")
        ->required();
    cl->add_flag("--diagnostic", cl_diagnostic,
                 "surfaces-dual: also report tuples excluded by the L^2 = 1 <=> n = 2 filter");
    RangeFlags cl_ranges;
    cl_ranges.attach(cl);

    auto* vt = app.add_subcommand("verify-theorem", "run the whole verification battery");
    vt->fallthrough();
    std::string vt_golden;
    bool vt_wide = false;
    vt->add_option("--golden", vt_golden, "compare the report byte-for-byte to this file");
    vt->add_flag("--wide", vt_wide, "widen the classification ranges 2x");

    try {
        app.parse(argc, argv);

        std::map<std::string, std::string> cfg;
        if (!config_path.empty()) cfg = ulrich::parse_config_file(config_path);

        if (cu->parsed()) {
            const auto m = ulrich::parse_model(cu_model);
            const auto E = ulrich::parse_sheaf(m, cu_sheaf);
            const auto H = ulrich::parse_class(m, cu_H);
            const json snapshot{{"model", cu_model}, {"sheaf", cu_sheaf}, {"H", cu_H}};
            return emit(ulrich::cmd_check_ulrich(m, E, H, snapshot), out_path, format, "");
        }
        if (co->parsed()) {
            const auto m = ulrich::parse_model(co_model);
            const auto E = ulrich::parse_sheaf(m, co_sheaf);
            const json snapshot{{"model", co_model}, {"sheaf", co_sheaf}};
            return emit(ulrich::cmd_coh(m, E, snapshot), out_path, format, "");
        }
        if (cl->parsed()) {
            ulrich::SearchConfig defaults;
            std::string section;
            if (cl_sub == "curves-dual" || cl_sub == "curves-syz") {
                defaults = ulrich::default_curve_ranges();
                section = "curves";
            } else if (cl_sub == "surfaces-dual") {
                defaults = ulrich::default_surface_ranges();
                section = "surfaces";
            } else if (cl_sub == "p1xp1-example") {
                defaults = ulrich::default_quadric_example_ranges();
                section = "quadric-example";
            } else if (cl_sub == "prop52-scan") {
                defaults = ulrich::default_surface_ranges();
                defaults.k = {-20, 20};
                section = "prop52";
            } else {
                throw ulrich::UsageError("unknown classify subcommand '" + cl_sub + "'");
            }
            auto sc = ulrich::search_config_from(cfg, section, defaults);
            cl_ranges.apply(sc);
            if (sc.k.empty() || sc.a.empty())
                throw ulrich::UsageError("empty or unbounded range refused");
            return emit(ulrich::cmd_classify(cl_sub, sc, cl_diagnostic,
                                             search_config_json(sc)),
                        out_path, format, "");
        }
        if (vt->parsed()) {
            auto curve = ulrich::search_config_from(cfg, "curves",
                                                    ulrich::default_curve_ranges());
            auto surface = ulrich::search_config_from(cfg, "surfaces",
                                                      ulrich::default_surface_ranges());
            auto quad = ulrich::search_config_from(cfg, "quadric-example",
                                                   ulrich::default_quadric_example_ranges());
            auto bounds = ulrich::sweep_bounds_from(cfg, ulrich::SweepBounds{});
            if (vt_wide) {
                widen(curve);
                widen(surface);
                widen(quad);
            }
            const json snapshot{{"curves", search_config_json(curve)},
                                {"surfaces", search_config_json(surface)},
                                {"quadric-example", search_config_json(quad)},
                                {"sweep", sweep_bounds_json(bounds)},
                                {"wide", vt_wide}};
            return emit(ulrich::cmd_verify_theorem(curve, surface, quad, bounds, snapshot),
                        out_path, format, vt_golden);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ulrich::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
