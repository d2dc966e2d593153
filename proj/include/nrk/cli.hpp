#ifndef NRK_CLI_HPP
#define NRK_CLI_HPP

#include <string>

#include <json.hpp>

namespace nrk::cli {

struct JobSpec {
    std::string command;
    nlohmann::json field;
    nlohmann::json payload = nlohmann::json::object();
    int precision = 50;
    std::string output = "text";
};

struct RunResult {
    int exit_code = 0;
    std::string out;  // stdout
    std::string err;  // single diagnostic line on failure
};

/* { "schema": 1, "command": ..., "field": {...}, "payload": {...},
 *   "precision": 50, "output": "text" | "json" }; format_error on bad input */
JobSpec job_from_json(const nlohmann::json& j);

/* exit codes: 0 ok, 1 format or schema, 2 domain, 3 precision */
RunResult run(const JobSpec& job);

}  // namespace nrk::cli

#endif
