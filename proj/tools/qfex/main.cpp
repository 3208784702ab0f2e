#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qfex/commands.hpp"
#include "qfex/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Fourier spectrum analysis and training for few-qubit encoding circuits"};
    app.set_version_flag("--version", std::string(qfex::version));
    app.require_subcommand(1);

    std::string spec_path;
    std::string config_path;
    std::string out_dir;
    int realizations = 10000;
    std::uint64_t seed = 0;
    int list_size = 0;
    int max_element = 0;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Wavenumber profile and frequency report for an architecture");
    spectrum->add_option("-s,--spec", spec_path, "architecture spec JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    spectrum->add_option("-o,--out", out_dir, "output directory")->required();

    CLI::App* train = app.add_subcommand(
        "train", "Fit architectures to the top-hat target and dump loss/spectrum/fit data");
    train->add_option("-c,--config", config_path, "experiment config JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    train->add_option("-o,--out", out_dir, "output directory")->required();

    CLI::App* accessibility = app.add_subcommand(
        "accessibility", "Sample random realizations and tabulate Fourier amplitudes/phases");
    accessibility->add_option("-s,--spec", spec_path, "architecture spec JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    accessibility->add_option("-r,--realizations", realizations, "number of realizations")
        ->check(CLI::PositiveNumber);
    accessibility->add_option("--seed", seed, "RNG seed");
    accessibility->add_option("-o,--out", out_dir, "output directory")->required();

    CLI::App* diffsearch = app.add_subcommand(
        "diffsearch", "Exhaustive search for perfect difference lists");
    diffsearch->add_option("-m,--size", list_size, "list size m")->required();
    diffsearch->add_option("-e,--max-element", max_element, "largest allowed element")
        ->required();
    diffsearch->add_option("-o,--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        return app.exit(error);
    }

    try {
        if (spectrum->parsed()) {
            qfex::cli::cmd_spectrum(spec_path, out_dir);
        } else if (train->parsed()) {
            qfex::cli::cmd_train(config_path, out_dir);
        } else if (accessibility->parsed()) {
            qfex::cli::cmd_accessibility(spec_path, realizations, seed, out_dir);
        } else if (diffsearch->parsed()) {
            qfex::cli::cmd_diffsearch(list_size, max_element, out_dir);
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
