// Command-line front end: parses flags into key=value config text, runs one
// library command through the C API, writes a CSV (or JSON document) plus a
// .meta.json sidecar echoing the resolved run configuration and results.

#include "intrinsic_metrics.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int fail(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return code;
}

// JSON config files may be sidecars from earlier runs; lift their "spec"
// object back into key=value lines.  Anything else passes through verbatim.
int config_file_to_text(const std::string& path, std::string& out) {
    std::ifstream in(path);
    if (!in) return fail(IVM_ERR_IO, "cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        out = text;
        return IVM_OK;
    }
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded())
        return fail(IVM_ERR_PARAM, "config file '" + path + "' is not valid JSON");
    const nlohmann::json& spec = doc.contains("spec") ? doc["spec"] : doc;
    if (!spec.is_object())
        return fail(IVM_ERR_PARAM, "config file '" + path + "' has no key/value spec");
    std::string lines;
    for (const auto& [key, value] : spec.items()) {
        if (key == "command") continue;  // ours, not the library's
        lines += key;
        lines += "=";
        lines += value.is_string() ? value.get<std::string>() : value.dump();
        lines += "\n";
    }
    out = lines;
    return IVM_OK;
}

// Leftover tokens are free-form config flags: --key value or --key=value.
int flags_to_text(const std::vector<std::string>& tokens, std::string& out) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) != 0 || tok.size() <= 2)
            return fail(IVM_ERR_PARAM, "unexpected argument '" + tok + "'");
        const std::string body = tok.substr(2);
        const std::size_t eq = body.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            key = body.substr(0, eq);
            value = body.substr(eq + 1);
        } else {
            key = body;
            if (i + 1 >= tokens.size() || tokens[i + 1].rfind("--", 0) == 0)
                return fail(IVM_ERR_PARAM, "flag '--" + key + "' needs a value");
            value = tokens[++i];
        }
        if (key.empty()) return fail(IVM_ERR_PARAM, "empty flag name in '" + tok + "'");
        out += key + "=" + value + "\n";
    }
    return IVM_OK;
}

int write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return IVM_OK;
    }
    std::ofstream outf(path, std::ios::binary);
    if (!outf) return fail(IVM_ERR_IO, "cannot open '" + path + "' for writing");
    outf << content;
    outf.flush();
    if (!outf) return fail(IVM_ERR_IO, "failed writing '" + path + "'");
    std::cout << "wrote " << path << "\n";
    return IVM_OK;
}

std::string sidecar_path(const std::string& csv_path) {
    const std::string suffix = ".csv";
    if (csv_path.size() > suffix.size() &&
        csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return csv_path.substr(0, csv_path.size() - suffix.size()) + ".meta.json";
    return csv_path + ".meta.json";
}

struct TableHandle {
    ivm_table* t = nullptr;
    ~TableHandle() { ivm_table_free(t); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { ivm_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Intrinsic volume metrics: beta polytopes, convergence-rate "
        "experiments, and closed-form constants"};
    app.set_version_flag("--version", ivm_version());
    app.allow_extras();

    std::string command, config_path, out_path, format = "csv";
    app.add_option("command", command,
                   "validate | theorem1 | rate | optimize | constants | appendixB")
        ->required();
    app.add_option("--config", config_path, "key=value file or a .meta.json sidecar");
    app.add_option("--out", out_path, "output path ('-' prints to stdout)");
    app.add_option("--format", format, "csv (with .meta.json sidecar) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.footer(
        "Remaining --key value flags become config entries and win over the\n"
        "config file.  Keys depend on the command; an unknown key lists the\n"
        "valid ones.  Threads: set INTRINSIC_METRICS_THREADS (results are\n"
        "identical for any thread count).");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : IVM_ERR_PARAM;
    }

    std::string config_text;
    if (!config_path.empty()) {
        const int rc = config_file_to_text(config_path, config_text);
        if (rc != IVM_OK) return rc;
        if (!config_text.empty() && config_text.back() != '\n') config_text += "\n";
    }
    {
        const int rc = flags_to_text(app.remaining(), config_text);
        if (rc != IVM_OK) return rc;
    }

    TableHandle table;
    const int rc = ivm_run_command(command.c_str(), config_text.c_str(), &table.t);
    if (rc != IVM_OK) return fail(rc, ivm_last_error());

    if (format == "json") {
        StringHandle doc{ivm_table_doc_json(table.t)};
        return write_file(out_path.empty() ? command + ".json" : out_path, doc.str());
    }
    const std::string csv_path = out_path.empty() ? command + ".csv" : out_path;
    StringHandle csv{ivm_table_csv(table.t)};
    StringHandle meta{ivm_table_meta_json(table.t)};
    if (const int wrc = write_file(csv_path, csv.str()); wrc != IVM_OK) return wrc;
    if (csv_path == "-") return IVM_OK;
    return write_file(sidecar_path(csv_path), meta.str());
}
