#include "shapeparts/matrix_io.hpp"
#include "shapeparts/pipeline.hpp"
#include "shapeparts/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decomposes closed 2D contours into parts by clustering a "
      "neighborhood-restricted visibility graph"};

  std::vector<std::string> inputs;
  shapeparts::PipelineConfig cfg;
  long long samples = 200;
  int radius = 0;
  std::string out_dir = ".";
  std::string format = "records";
  bool dump_matrices = false;
  bool exclude_unassigned_pairs = false;

  app.add_option("inputs", inputs, "Contour files (.csv or .json)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--samples", samples, "Resampled boundary point count")
      ->default_val(200)
      ->check(CLI::Range(8LL, 100000LL));
  app.add_option("--radius", radius,
                 "Neighborhood radius override (skips estimation)");
  app.add_option("--std-mult", cfg.std_multiplier,
                 "Std-deviation multiplier for the cohesiveness threshold")
      ->default_val(2.0);
  app.add_option("--null-graphs", cfg.num_random_graphs,
                 "Random graphs in the null ensemble")
      ->default_val(250);
  app.add_option("--swap-factor", cfg.swap_factor,
                 "Rewiring swap attempts per edge")
      ->default_val(10);
  app.add_option("--seed", cfg.rng_seed, "Random seed")->default_val(0);
  app.add_flag("--postprocess", cfg.postprocess,
               "Dissolve the cluster most entangled with unassigned points");
  app.add_flag("--include-direct-edges", cfg.include_direct_edges,
               "Add direct visibility edges on top of the two-step counts");
  app.add_flag("--dump-matrices", dump_matrices,
               "Write visibility, restricted and diffusion matrices");
  app.add_flag("--verbose-report", cfg.verbose_report,
               "Include all null-ensemble samples in the record");
  app.add_flag("--external-density-clusters-only", exclude_unassigned_pairs,
               "Exclude pairs touching unassigned nodes from the external "
               "density numerator");
  app.add_option("--format", format, "Output: records, svg or both")
      ->default_val("records")
      ->check(CLI::IsMember({"records", "svg", "both"}));
  app.add_option("--out-dir", out_dir, "Output directory")->default_val(".");
  app.add_option("--threads", cfg.num_threads,
                 "Null-ensemble worker threads (0 = hardware)")
      ->default_val(0);

  CLI11_PARSE(app, argc, argv);

  cfg.sample_count = static_cast<Eigen::Index>(samples);
  if (radius > 0) cfg.radius = radius;
  if (exclude_unassigned_pairs)
    cfg.cross_pair_policy = shapeparts::CrossPairPolicy::BetweenClustersOnly;

  fs::create_directories(out_dir);

  int failures = 0;
  for (const std::string& input : inputs) {
    const std::string stem = fs::path(input).stem().string();
    try {
      const shapeparts::Contour contour = shapeparts::load_contour_file(input);
      const shapeparts::ShapeResult result =
          shapeparts::run_pipeline(contour, cfg);

      if (format == "records" || format == "both") {
        write_file(fs::path(out_dir) / (stem + ".json"),
                   shapeparts::result_record(result, cfg).dump(2) + "\n");
      }
      if (format == "svg" || format == "both") {
        std::ofstream svg(fs::path(out_dir) / (stem + ".svg"),
                          std::ios::binary);
        shapeparts::render_svg(result.resampled, result.decomposition, svg);
      }
      if (dump_matrices) {
        std::ofstream a(fs::path(out_dir) / (stem + ".A.txt"));
        shapeparts::write_matrix(a, result.visibility.A);
        std::ofstream an(fs::path(out_dir) / (stem + ".An.txt"));
        shapeparts::write_matrix(an, result.restricted.A);
        std::ofstream dm(fs::path(out_dir) / (stem + ".D.txt"));
        shapeparts::write_matrix(dm, result.diffusion.D);
      }

      std::cout << stem << ": " << result.decomposition.clusters.size()
                << " cluster(s), " << result.decomposition.unassigned.size()
                << " unassigned, radius " << result.radius
                << (result.radius_estimated ? " (estimated)" : " (override)")
                << ", threshold " << result.report.threshold << "\n";
    } catch (const std::exception& e) {
      std::cerr << stem << ": error: " << e.what() << "\n";
      ++failures;
    }
  }
  return failures > 0 ? 1 : 0;
}
