#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "liftred/cli/catalog.hpp"
#include "liftred/cli/commands.hpp"
#include "liftred/report/report_io.hpp"

namespace {

liftred::ProblemFile load(const std::string &target) {
    const std::string prefix = "catalog:";
    if (target.rfind(prefix, 0) == 0) return liftred::catalog(target.substr(prefix.size()));
    return liftred::load_problem_file(target);
}

int print_catalog(const std::string &name) {
    if (name.empty()) {
        for (const auto &[n, summary] : liftred::catalog_listing()) std::cout << n << "\t" << summary << "\n";
        return 0;
    }
    std::cout << liftred::catalog_text(name);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact checks for tangent lifts of Poisson structures and momentum maps"};
    std::string command, target, report_path, box, fd_step;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    bool quiet = false;

    std::string commands;
    for (const auto &c : liftred::command_names()) commands += (commands.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + commands + ", catalog")->required();
    app.add_option("target", target, "problem file, or catalog:<name>");
    auto *seed_opt = app.add_option("--seed", seed, "sampling seed (u64)");
    auto *samples_opt = app.add_option("--samples", samples, "number of sample points")->check(CLI::PositiveNumber);
    app.add_option("--box", box, "sampling box 'lo,hi' with rational bounds");
    app.add_option("--fd-step", fd_step, "finite-difference step as a rational, e.g. 1/1000000");
    app.add_option("--report", report_path, "write the structured report to this path");
    app.add_flag("--quiet", quiet, "print failing reports and the summary only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (command == "catalog") return print_catalog(target);
        if (target.empty()) throw liftred::InvalidInput("command '" + command + "' needs a problem file");

        liftred::RunOptions opt;
        if (*seed_opt) opt.seed = seed;
        if (*samples_opt) opt.samples = samples;
        if (!box.empty()) opt.box = liftred::detail::ProblemBuilder::parse_interval(box);
        if (!fd_step.empty()) {
            opt.fd_step = liftred::parse_rational(fd_step);
            if (*opt.fd_step <= 0) throw liftred::InvalidInput("--fd-step must be positive");
        }

        const liftred::ProblemFile pf = load(target);
        const liftred::RunResult result = liftred::run(command, pf, opt);

        std::size_t passed = 0, failed = 0, informative = 0;
        for (const auto &r : result.reports) {
            if (r.passed()) ++passed;
            else if (r.failed()) ++failed;
            else ++informative;
            if (!quiet || r.failed()) std::cout << liftred::render_text(r);
        }
        std::cout << command << " " << target << ": " << passed << " passed, " << failed << " failed, " << informative
                  << " informative\n";

        if (!report_path.empty()) {
            std::ofstream out(report_path, std::ios::binary);
            if (!out) throw liftred::InvalidInput("cannot write report to '" + report_path + "'");
            out << liftred::emit_reports(result.reports);
        }
        return result.exit_code;
    } catch (const liftred::Error &e) {
        std::cerr << "liftred: " << e.what() << "\n";
        return 2;
    }
}
