#pragma once

#include <cstdint>
#include <filesystem>

namespace qfex::cli {

// Each command writes its data files into out_dir and a manifest.json last,
// so a failed run never leaves a manifest behind. Data files are
// byte-reproducible for fixed inputs; only the manifest carries a timestamp.

void cmd_spectrum(const std::filesystem::path& spec_path,
                  const std::filesystem::path& out_dir);

void cmd_train(const std::filesystem::path& config_path,
               const std::filesystem::path& out_dir);

void cmd_accessibility(const std::filesystem::path& spec_path, int realizations,
                       std::uint64_t seed, const std::filesystem::path& out_dir);

void cmd_diffsearch(int m, int max_element, const std::filesystem::path& out_dir);

}  // namespace qfex::cli
