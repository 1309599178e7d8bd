#include <cstdio>
#include <iostream>
#include <vector>

#include "swfilm/config.hpp"
#include "swfilm/csv.hpp"
#include "swfilm/sweep.hpp"

// Exit codes: 0 success, 2 usage error, 3 model/convergence error, 4 I/O error.

namespace {

int run(const swfilm::RunConfiguration& cfg) {
    const swfilm::SeriesControl control = cfg.series_control();

    std::vector<swfilm::SweepRow> rows;
    if (const auto spec = cfg.sweep_spec()) {
        rows = swfilm::run_sweep(*spec, control, cfg.oracle);
    } else {
        rows.push_back(swfilm::evaluate_point_throwing(cfg.model_point(), control, cfg.oracle));
    }

    if (cfg.output.empty())
        swfilm::emit_csv(rows, cfg.oracle, std::cout);
    else
        swfilm::emit_csv_file(rows, cfg.oracle, cfg.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        const std::vector<std::string> args(argv + 1, argv + argc);
        const swfilm::RunConfiguration cfg = swfilm::parse_config(args);
        return run(cfg);
    } catch (const swfilm::HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const swfilm::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n(run with --help for usage)\n";
        return 2;
    } catch (const swfilm::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    } catch (const swfilm::Error& e) {
        std::cerr << "model error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
