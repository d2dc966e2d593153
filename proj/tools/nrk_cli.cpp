#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "nrk/cli.hpp"
#include "nrk/errors.hpp"

using json = nlohmann::json;

namespace {

json parse_json_flag(const std::string& text, const std::string& key)
{
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        throw nrk::format_error("key '" + key + "': not valid JSON");
    }
}

/* a bare string such as x or (1-x)^-1 is accepted where JSON is expected */
json parse_json_or_string(const std::string& text, const std::string& key)
{
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        if (text.empty())
            throw nrk::format_error("key '" + key + "': empty value");
        return json(text);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bloch regulators, arithmetic degrees and K-theory ranks of number rings"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string field = R"({"poly":[0,1]})";
    int precision = 50;
    std::string output = "text";
    std::string job_path;
    std::string payload_text;
    app.add_option("--field", field, "field record, e.g. {\"poly\":[1,0,1]}");
    app.add_option("--precision", precision, "decimal digits (default 50)");
    app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--job", job_path, "read a JSON job from a file, '-' for stdin");
    app.add_option("--payload", payload_text, "payload record as JSON");

    std::map<std::string, std::string> flags;
    auto add = [&](CLI::App* sub, const std::string& name, const std::string& key, const std::string& help) {
        sub->add_option(name, flags[key], help);
    };
    app.add_subcommand("field-info", "degree, signature and embeddings");
    add(app.add_subcommand("dilog", "Li2 and Bloch-Wigner D at a point"), "--z", "z", "complex literal a+bi");
    auto* bc = app.add_subcommand("bloch-check", "kernel of lambda -> lambda ^ (1-lambda)");
    add(bc, "--candidates", "candidates", "JSON array of elements");
    add(bc, "--check", "check", "JSON multiplicity vector to test");
    add(app.add_subcommand("regulator", "K3 regulator of a Bloch element"), "--element", "element",
        "{\"support\":[...],\"multiplicities\":[...]}");
    add(app.add_subcommand("unit-reg", "log-modulus regulator of a unit"), "--unit", "unit", "element");
    for (const char* name : {"degree", "height"}) {
        auto* s = app.add_subcommand(name, std::string(name) == "degree" ? "arithmetic degree of a metrized bundle"
                                                                        : "height of c-hat of a metrized bundle");
        add(s, "--ideal-basis", "ideal_basis", "JSON rows in integral-basis coordinates");
        add(s, "--ideal-generators", "ideal_generators", "JSON array of elements");
        add(s, "--metric", "metric", "\"standard\" or JSON array of decimal strings");
        if (std::string(name) == "degree") {
            add(s, "--sections", "sections", "JSON array of elements");
        } else {
            add(s, "--N", "N", "power of the ideal that is principal");
            add(s, "--generator", "generator", "generator of the N-th power");
        }
    }
    add(app.add_subcommand("kranks", "Borel ranks of the graded model"), "--max-p", "max_p", "largest p");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << json{{"schema", 1}, {"error", "format"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    nrk::cli::JobSpec job;
    try {
        if (!job_path.empty()) {
            std::string text;
            if (job_path == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(job_path);
                if (!in)
                    throw nrk::format_error("key 'job': cannot open " + job_path);
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            job = nrk::cli::job_from_json(parse_json_flag(text, "job"));
        } else {
            if (app.get_subcommands().empty())
                throw nrk::format_error("key 'command': missing subcommand");
            job.command = app.get_subcommands().front()->get_name();
            job.field = parse_json_flag(field, "field");
            job.precision = precision;
            job.output = output;
            if (!payload_text.empty())
                job.payload = parse_json_flag(payload_text, "payload");
            for (const auto& [key, value] : flags) {
                if (value.empty())
                    continue;
                if (key == "z" && value.front() != '"')
                    job.payload[key] = value;
                else
                    job.payload[key] = parse_json_or_string(value, key);
            }
        }
    } catch (const nrk::error& e) {
        std::cerr << json{{"schema", 1}, {"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    nrk::cli::RunResult r = nrk::cli::run(job);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
