#include "pbwkit/error.hpp"
#include "pbwkit/report.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>

namespace {

struct Outcome {
    std::string out;
    std::string err;
    int code = 0;
};

Outcome run_file(pbwkit::Command cmd, const std::string& path, const pbwkit::PbwOptions& opts,
                 const std::optional<std::string>& field, bool as_json) {
    Outcome o;
    try {
        pbwkit::Presentation p = pbwkit::load_presentation(path);
        if (field) p = pbwkit::change_field(p, pbwkit::parse_field(*field));
        nlohmann::json r = pbwkit::run_command(cmd, p, opts);
        r["file"] = path;
        o.out = as_json ? r.dump(2) + "\n" : "file: " + path + "\n" + pbwkit::render_text(r);
        o.code = pbwkit::report_exit_code(r);
    } catch (const pbwkit::Error& e) {
        o.code = pbwkit::error_exit_code(e.code());
        if (as_json)
            o.out = nlohmann::json{{"file", path}, {"error", {{"code", pbwkit::error_name(e.code())}, {"message", e.what()}}}}.dump(2) + "\n";
        o.err = path + ": " + e.what() + "\n";
    } catch (const std::exception& e) {
        o.code = 19;
        o.err = path + ": " + e.what() + "\n";
    }
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks PBW properties of filtered deformations of graded algebras"};
    app.require_subcommand(1);
    std::vector<std::string> files;
    int upto = -1;
    bool as_json = false;
    std::optional<std::string> field;

    for (const char* name : {"check", "jacobi", "complexity", "tor", "hilbert", "rees"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("files", files, "presentation files (run in parallel)")->required()->check(CLI::ExistingFile);
        sub->add_option("--upto", upto, "degree bound, defaults to max_degree")->check(CLI::Range(0, 10));
        sub->add_flag("--json", as_json, "emit the report as JSON");
        sub->add_option("--field", field, "override the field, e.g. Fp:101");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : pbwkit::error_exit_code(pbwkit::ErrorCode::ValidationError);
    }

    const pbwkit::Command cmd = pbwkit::parse_command(app.get_subcommands().front()->get_name());
    pbwkit::PbwOptions opts;
    opts.upto = upto;

    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : files)
        jobs.push_back(std::async(files.size() > 1 ? std::launch::async : std::launch::deferred, run_file, cmd, f, opts, field, as_json));
    int code = 0;
    for (auto& j : jobs) {
        Outcome o = j.get();
        std::cout << o.out;
        std::cerr << o.err;
        code = std::max(code, o.code);
    }
    return code;
}
