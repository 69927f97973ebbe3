#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "ldv/ldv.h"

namespace {

struct ProblemDeleter {
  void operator()(ldv_problem* p) const { ldv_problem_destroy(p); }
};
struct TextDeleter {
  void operator()(ldv_text* t) const { ldv_text_destroy(t); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau varieties of complete diagonals of rational functions"};
  app.set_version_flag("--version", std::string(ldv_version()));

  std::string command, path, format = "human";
  std::int64_t max_order = -1;
  std::uint64_t spair_cap = 0;
  bool skip_nondeg = false;
  std::vector<std::int64_t> ray;

  app.add_option("command", command, "nondeg | transform | faces | landau | diagonal | radius | crosscheck")
      ->required()
      ->check(CLI::IsMember({"nondeg", "transform", "faces", "landau", "diagonal", "radius", "crosscheck"}));
  app.add_option("file", path, "problem file")->required();
  app.add_option("--max", max_order, "largest diagonal order K")->check(CLI::NonNegativeNumber);
  app.add_flag("--skip-nondeg", skip_nondeg, "skip the nondegeneracy check");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--spair-cap", spair_cap, "S-pair budget per Groebner basis")->check(CLI::PositiveNumber);
  app.add_option("--ray", ray, "restrict the diagonal to k = m * ray")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : LDV_ERR_INPUT;
  }

  ldv_problem* raw = nullptr;
  ldv_status status = ldv_problem_from_file(path.c_str(), &raw);
  if (status != LDV_OK) {
    std::cerr << "error: " << ldv_last_error() << "\n";
    return status;
  }
  std::unique_ptr<ldv_problem, ProblemDeleter> problem(raw);

  ldv_run_options options;
  ldv_run_options_default(&options);
  options.max_order = max_order;
  options.skip_nondeg = skip_nondeg;
  options.machine_format = format == "machine";
  options.spair_cap = spair_cap;
  if (!ray.empty()) {
    options.ray = ray.data();
    options.ray_length = ray.size();
  }

  ldv_text* text_raw = nullptr;
  status = ldv_run(problem.get(), command.c_str(), &options, &text_raw);
  std::unique_ptr<ldv_text, TextDeleter> text(text_raw);
  if (text) std::fwrite(ldv_text_data(text.get()), 1, ldv_text_size(text.get()), stdout);
  if (*ldv_last_error()) std::cerr << ldv_last_error() << "\n";
  return status;
}
