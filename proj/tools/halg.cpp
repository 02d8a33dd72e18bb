// halg: check spec files, construct presets, list invariants.
#include "halg/specfile.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kMalformed = 2;

std::string parent_dir(const std::string& path) {
    auto p = std::filesystem::path(path).parent_path();
    return p.empty() ? "." : p.string();
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

int cmd_check(const std::string& path, const std::string& format, const std::string& out, bool serial) {
    halg::Limits limits = halg::limits_from_env();
    halg::Json spec = halg::load_spec_file(path);
    halg::SpecRun run = halg::run_spec(spec, parent_dir(path), limits, !serial);
    std::string text = format == "json" ? halg::report_json(run).dump(2) + "\n" : halg::report_text(run);
    if (out.empty()) {
        std::cout << text;
    } else if (!write_file(out, text)) {
        std::cerr << "halg: cannot write " << out << "\n";
        return kMalformed;
    }
    return run.exit_code();
}

int cmd_construct(const std::string& preset, const std::string& out) {
    halg::Json j = halg::construct_preset(preset, halg::limits_from_env());
    if (!write_file(out, j.dump(1) + "\n")) {
        std::cerr << "halg: cannot write " << out << "\n";
        return kMalformed;
    }
    return 0;
}

int cmd_invariants(const std::string& path, const std::string& id) {
    halg::Json spec = halg::load_spec_file(path);
    std::cout << halg::listing_text(halg::invariants_of(spec, parent_dir(path), id, halg::limits_from_env()));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hopf algebroid construction and verification"};
    app.require_subcommand(1);

    std::string path, format = "text", out, preset, id;
    bool serial = false;

    auto* check = app.add_subcommand("check", "Run the checks of a spec file");
    check->add_option("file", path, "Spec file (JSON)")->required();
    check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    check->add_option("--out", out, "Write the report to a file");
    check->add_flag("--serial", serial, "Run suites one after another");

    auto* construct = app.add_subcommand("construct", "Serialize a preset structure");
    construct->add_option("preset", preset, "Preset id, e.g. pair:2")->required();
    construct->add_option("--out", out, "Output file")->required();

    auto* inv = app.add_subcommand("invariants", "List invariant forms or base invariants");
    inv->add_option("file", path, "Spec file (JSON)")->required();
    inv->add_option("--id", id, "Structure id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kMalformed;
    }

    try {
        if (*check) return cmd_check(path, format, out, serial);
        if (*construct) return cmd_construct(preset, out);
        return cmd_invariants(path, id);
    } catch (const halg::FormatError& e) {
        std::cerr << "halg: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "halg: " << e.what() << "\n";
        return kMalformed;
    }
}
