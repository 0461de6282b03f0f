#ifndef ULRICH_REPORT_HPP
#define ULRICH_REPORT_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "ulrich/classify.hpp"
#include "ulrich/model.hpp"
#include "ulrich/sweep.hpp"

namespace ulrich {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// raised on malformed input; the CLI maps it to exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parsing of the CLI surface
VarietyModel parse_model(const std::string& s);
BundleClass parse_class(const VarietyModel& m, const std::string& s);
// grammar: line:<c> | syz:<L>:<t> | dualsyz:<L>:<t> | sum:<e>;<e>;...
SheafExpr parse_sheaf(const VarietyModel& m, const std::string& s);

// flat key-value config file with [section] headers; keys are returned as
// "section.key"
std::map<std::string, std::string> parse_config_file(const std::string& path);
SearchConfig search_config_from(const std::map<std::string, std::string>& cfg,
                                const std::string& section, SearchConfig defaults);
SweepBounds sweep_bounds_from(const std::map<std::string, std::string>& cfg,
                              SweepBounds defaults);

struct RunOutput {
    json doc;
    int exit_code = 0;  // 0 ok, 1 mathematical mismatch
};

RunOutput cmd_check_ulrich(const VarietyModel& m, const SheafExpr& E,
                           const BundleClass& H, const json& config_snapshot);
RunOutput cmd_coh(const VarietyModel& m, const SheafExpr& E, const json& config_snapshot);
RunOutput cmd_classify(const std::string& sub, const SearchConfig& cfg, bool diagnostic,
                       const json& config_snapshot);
RunOutput cmd_verify_theorem(const SearchConfig& curve_cfg, const SearchConfig& surface_cfg,
                             const SearchConfig& quad_cfg, const SweepBounds& bounds,
                             const json& config_snapshot);

// pure function of the JSON payload
std::string render_markdown(const json& doc);

json solution_to_json(const ClassificationSolution& s);
json ulrich_report_to_json(const UlrichReport& r);

}  // namespace ulrich

#endif
