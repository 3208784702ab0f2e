#include "qfex/commands.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfex/diffset.hpp"
#include "qfex/io.hpp"
#include "qfex/parallel.hpp"
#include "qfex/spectrum.hpp"
#include "qfex/train.hpp"
#include "qfex/version.hpp"

namespace qfex::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json manifest_base(const std::string& command, const fs::path& input_path,
                   const fs::path& out_dir) {
    return json{{"command", command},
                {"input", input_path.string()},
                {"output_dir", out_dir.string()},
                {"timestamp", timestamp_utc()},
                {"version", std::string(qfex::version)}};
}

void write_manifest(const fs::path& out_dir, json manifest,
                    const std::vector<std::string>& files) {
    manifest["files"] = files;
    write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

std::string spectrum_csv(const ArchitectureSpec& spec, std::span<const double> params,
                         int k_max) {
    const FourierSpectrum spectrum = model_spectrum(spec, params, k_max);
    std::ostringstream csv;
    csv << "k,re,im,amplitude,phase\n";
    for (const auto& [k, c] : spectrum.coefficients) {
        csv << k << ',' << format_double(c.real()) << ',' << format_double(c.imag())
            << ',' << format_double(spectrum.amplitude(k)) << ','
            << format_double(spectrum.phase(k)) << '\n';
    }
    return csv.str();
}

}  // namespace

void cmd_spectrum(const fs::path& spec_path, const fs::path& out_dir) {
    const ArchitectureSpec spec = spec_from_json(read_json_file(spec_path));
    const WavenumberProfile profile = wavenumber_profile(generator_eigenvalues(spec));
    const std::vector<int> frequencies = predicted_frequencies(spec);

    fs::create_directories(out_dir);

    std::ostringstream csv;
    csv << "k,degeneracy\n";
    for (const auto& [k, degeneracy] : profile.entries) {
        csv << k << ',' << degeneracy << '\n';
    }
    write_text_file(out_dir / "spectrum.csv", csv.str());

    const int hilbert_dim = 1 << (is_parallel(spec.family) ? spec.n : 1);
    const int repetitions = is_parallel(spec.family) ? 1 : spec.n;
    json summary = spec_to_json(spec);
    summary["frequencies"] = frequencies;
    summary["k_max"] = profile.k_max();
    summary["upper_bound"] = frequency_upper_bound(hilbert_dim, repetitions);
    summary["total_degeneracy"] = profile.total();
    write_text_file(out_dir / "summary.json", summary.dump(2) + "\n");

    write_manifest(out_dir, manifest_base("spectrum", spec_path, out_dir),
                   {"spectrum.csv", "summary.json"});

    std::cout << to_string(spec.family) << " n=" << spec.n << ": "
              << profile.entries.size() << " wavenumbers, k_max " << profile.k_max()
              << ", " << frequencies.size() << " frequencies\n";
}

void cmd_train(const fs::path& config_path, const fs::path& out_dir) {
    const TrainRunConfig config = train_config_from_json(read_json_file(config_path));
    const Dataset data = top_hat_dataset(config.num_points);

    struct Run {
        ArchitectureFamily family;
        std::uint64_t seed;
        std::string dir_name;
        double final_loss = 0.0;
    };
    std::vector<Run> runs;
    for (const ArchitectureFamily family : config.families) {
        for (const std::uint64_t seed : config.seeds) {
            runs.push_back({family, seed,
                            std::string(to_string(family)) + "_seed" + std::to_string(seed)});
        }
    }

    fs::create_directories(out_dir);
    for (const Run& run : runs) {
        fs::create_directories(out_dir / run.dir_name);
    }

    parallel_for(0, runs.size(), [&](std::size_t index) {
        Run& run = runs[index];
        const ArchitectureSpec spec = make_spec(run.family, config.n, config.var_depth);
        TrainConfig train_config;
        train_config.epochs = config.epochs;
        train_config.learning_rate = config.learning_rate;
        train_config.seed = run.seed;
        const TrainResult result = train(spec, train_config, data);
        run.final_loss = result.final_loss;

        const fs::path run_dir = out_dir / run.dir_name;

        std::ostringstream loss_csv;
        loss_csv << "epoch,loss\n";
        for (std::size_t epoch = 0; epoch < result.loss_history.size(); ++epoch) {
            loss_csv << epoch + 1 << ',' << format_double(result.loss_history[epoch]) << '\n';
        }
        write_text_file(run_dir / "loss.csv", loss_csv.str());

        json result_doc;
        result_doc["spec"] = spec_to_json(spec);
        result_doc["config"] = {{"epochs", train_config.epochs},
                                {"learning_rate", train_config.learning_rate},
                                {"seed", train_config.seed},
                                {"adam_beta1", train_config.adam_beta1},
                                {"adam_beta2", train_config.adam_beta2},
                                {"adam_epsilon", train_config.adam_epsilon},
                                {"num_points", config.num_points}};
        result_doc["loss_history"] = result.loss_history;
        result_doc["final_params"] = result.final_params;
        result_doc["final_loss"] = result.final_loss;
        write_text_file(run_dir / "result.json", result_doc.dump(2) + "\n");

        write_text_file(run_dir / "spectrum.csv", spectrum_csv(spec, result.final_params, 0));

        std::ostringstream fit_csv;
        fit_csv << "x,target,prediction\n";
        for (std::size_t i = 0; i < data.size(); ++i) {
            fit_csv << format_double(data.xs[i]) << ',' << format_double(data.ys[i]) << ','
                    << format_double(evaluate(spec, result.final_params, data.xs[i])) << '\n';
        }
        write_text_file(run_dir / "fit.csv", fit_csv.str());
    });

    std::vector<std::string> files;
    for (const Run& run : runs) {
        for (const char* name : {"loss.csv", "result.json", "spectrum.csv", "fit.csv"}) {
            files.push_back(run.dir_name + "/" + name);
        }
    }
    json manifest = manifest_base("train", config_path, out_dir);
    manifest["seeds"] = config.seeds;
    write_manifest(out_dir, std::move(manifest), files);

    for (const Run& run : runs) {
        std::cout << run.dir_name << ": final_loss " << format_double(run.final_loss) << "\n";
    }
}

void cmd_accessibility(const fs::path& spec_path, int realizations, std::uint64_t seed,
                       const fs::path& out_dir) {
    const ArchitectureSpec spec = spec_from_json(read_json_file(spec_path));
    const std::vector<AccessibilityRow> rows =
        accessibility_sample(spec, realizations, seed);

    fs::create_directories(out_dir);

    std::ostringstream csv;
    csv << "realization,k,amplitude,phase\n";
    for (const AccessibilityRow& row : rows) {
        csv << row.realization << ',' << row.k << ',' << format_double(row.amplitude)
            << ',' << format_double(row.phase) << '\n';
    }
    write_text_file(out_dir / "accessibility.csv", csv.str());

    const std::vector<PhasePairOccupancy> pairs = phase_grid_occupancy(rows);
    json occupancy;
    occupancy["grid_size"] = 20;
    occupancy["realizations"] = realizations;
    occupancy["seed"] = seed;
    occupancy["spec"] = spec_to_json(spec);
    double sum = 0.0;
    json pair_list = json::array();
    for (const PhasePairOccupancy& pair : pairs) {
        pair_list.push_back({{"k_low", pair.k_low},
                             {"k_high", pair.k_high},
                             {"occupancy", pair.occupancy}});
        sum += pair.occupancy;
    }
    occupancy["pairs"] = pair_list;
    occupancy["mean_occupancy"] = pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
    write_text_file(out_dir / "occupancy.json", occupancy.dump(2) + "\n");

    json manifest = manifest_base("accessibility", spec_path, out_dir);
    manifest["seed"] = seed;
    manifest["realizations"] = realizations;
    write_manifest(out_dir, std::move(manifest), {"accessibility.csv", "occupancy.json"});

    std::cout << to_string(spec.family) << " n=" << spec.n << ": " << realizations
              << " realizations, mean pair occupancy "
              << format_double(occupancy["mean_occupancy"].get<double>()) << "\n";
}

void cmd_diffsearch(int m, int max_element, const fs::path& out_dir) {
    const diffset::SearchResult result = diffset::search_perfect(m, max_element);

    fs::create_directories(out_dir);
    json doc;
    doc["m"] = m;
    doc["max_element"] = max_element;
    doc["solutions"] = result.solutions;
    doc["nodes_explored"] = result.nodes_explored;
    write_text_file(out_dir / "solutions.json", doc.dump(2) + "\n");

    json manifest = manifest_base("diffsearch", "", out_dir);
    manifest["m"] = m;
    manifest["max_element"] = max_element;
    write_manifest(out_dir, std::move(manifest), {"solutions.json"});

    std::cout << "m=" << m << " max_element=" << max_element << ": "
              << result.solutions.size() << " perfect list(s), "
              << result.nodes_explored << " nodes explored\n";
    for (const auto& solution : result.solutions) {
        std::cout << "  [";
        for (std::size_t i = 0; i < solution.size(); ++i) {
            std::cout << (i ? ", " : "") << solution[i];
        }
        std::cout << "]\n";
    }
}

}  // namespace qfex::cli
