#include "wps/manifest.hpp"

#include "wps/errors.hpp"

namespace wps {

nlohmann::json manifest_to_json(RunManifest const & m)
{
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["schema"] = kManifestSchema;
    j["command"] = m.command;
    j["field"] = m.field;
    j["weights"] = m.weights;
    if (!m.divisor.empty())
        j["divisor"] = m.divisor;
    if (!m.bound.empty())
        j["T"] = m.bound;
    if (!m.grid.empty())
        j["grid"] = m.grid;
    j["method"] = m.method;
    j["mode"] = m.mode;
    if (!m.open_constraint.empty()) {
        j["open"] = m.open_constraint;
        j["open_factor"] = m.open_factor;
    }
    j["tolerance"] = m.tolerance;
    if (!m.frame.empty()) {
        j["frame"] = m.frame;
        j["regulator"] = m.regulator;
    }
    if (m.samples) {
        j["samples"] = m.samples;
        j["seed"] = m.seed;
    }
    j["budget"] = m.budget;
    j["threads"] = m.threads;
    j["per_class"] = m.per_class;
    j["wall_seconds"] = m.wall_seconds;
    return j;
}

RunManifest manifest_from_json(nlohmann::json const & j)
{
    require(j.contains("command"), "manifest is missing 'command'");
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.field = j.value("field", std::string("Q"));
    if (j.contains("weights"))
        m.weights = j.at("weights").get<std::vector<std::string>>();
    m.divisor = j.value("divisor", std::string());
    m.bound = j.value("T", std::string());
    m.grid = j.value("grid", std::string());
    m.method = j.value("method", std::string("direct"));
    m.mode = j.value("mode", std::string("lemma-derived"));
    m.open_constraint = j.value("open", std::string());
    m.open_factor = j.value("open_factor", 1);
    m.tolerance = j.value("tolerance", 1e-9);
    m.frame = j.value("frame", std::string());
    m.regulator = j.value("regulator", 1.0);
    m.samples = j.value("samples", std::uint64_t(0));
    m.seed = j.value("seed", std::uint64_t(0));
    m.budget = j.value("budget", 1'000'000'000ULL);
    m.threads = j.value("threads", 0);
    m.per_class = j.value("per_class", false);
    m.wall_seconds = j.value("wall_seconds", 0.0);
    return m;
}

std::vector<std::string> manifest_to_args(RunManifest const & m)
{
    bool const counting = m.command == "count" || m.command == "sweep";
    bool const constant = m.command == "constant";
    bool const volume = m.command == "volume";
    auto full = [](double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::vector<std::string> a;
    a.push_back(m.command);
    if (counting || constant) {
        a.push_back("--field");
        a.push_back(m.field);
    }
    if (m.weights.size() == 1) {
        a.push_back("--weights");
        a.push_back(m.weights[0]);
    } else if (m.weights.size() > 1) {
        std::string prod;
        for (size_t i = 0; i < m.weights.size(); ++i)
            prod += (i ? ":" : "") + m.weights[i];
        a.push_back("--product");
        a.push_back(prod);
    }
    if (counting && !m.divisor.empty()) {
        a.push_back("--divisor");
        a.push_back(m.divisor);
    }
    if (m.command == "count" && !m.bound.empty()) {
        a.push_back("--T");
        a.push_back(m.bound);
    }
    if (m.command == "sweep" && !m.grid.empty()) {
        a.push_back("--grid");
        a.push_back(m.grid);
    }
    if (counting) {
        a.push_back("--method");
        a.push_back(m.method);
        if (!m.open_constraint.empty()) {
            a.push_back("--open");
            a.push_back(m.open_constraint);
            a.push_back("--open-factor");
            a.push_back(std::to_string(m.open_factor));
        }
        a.push_back("--budget");
        a.push_back(std::to_string(m.budget));
    }
    if (constant || m.command == "sweep") {
        a.push_back("--mode");
        a.push_back(m.mode);
        a.push_back("--tol");
        a.push_back(full(m.tolerance));
    }
    if (volume) {
        a.push_back("--frame");
        a.push_back(m.frame);
        a.push_back("--R");
        a.push_back(full(m.regulator));
        if (m.samples) {
            a.push_back("--mc");
            a.push_back(std::to_string(m.samples));
            a.push_back("--seed");
            a.push_back(std::to_string(m.seed));
        }
    }
    if (m.per_class)
        a.push_back("--classes");
    if (counting || volume) {
        a.push_back("--threads");
        a.push_back(std::to_string(m.threads));
    }
    return a;
}

} // namespace wps
