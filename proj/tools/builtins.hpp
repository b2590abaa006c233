#ifndef FINCAT_TOOLS_BUILTINS_HPP
#define FINCAT_TOOLS_BUILTINS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fincat::cli {

struct BuiltinOptions {
    int seeds = 200;
    int bound = 6;
    int truncate = 3;
    int degree = 2;
};

struct BuiltinResult {
    int exit_code = 0;    // 0 ok, 3 expectation failed
    std::string report;   // human-readable
    nlohmann::ordered_json json;
};

struct BuiltinInfo {
    std::string name;
    std::string summary;
};

const std::vector<BuiltinInfo>& builtin_catalog();
BuiltinResult run_builtin(const std::string& name, const BuiltinOptions& opt);

}  // namespace fincat::cli

#endif
