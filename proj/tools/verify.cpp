#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "twistroot/report.hpp"

namespace {

int usage_error(const std::string& message) {
  std::cerr << "verify: " << message << '\n';
  return 2;
}

void append(std::vector<twistroot::Task>& all, std::vector<twistroot::Task> more) {
  for (auto& t : more) all.push_back(std::move(t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Dehn twist root constructions: braid chain relations, "
               "symplectic shadows, polygon rotations, half-twist ledgers and elementary "
               "matrix roots."};
  app.require_subcommand(1);
  // global flags may appear after the subcommand name


  bool json = false;
  app.add_flag("--json", json, "emit one JSON record per line instead of text");
  long long jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for independent cases");
  long long word_budget = 10'000'000;
  app.add_option("--word-budget", word_budget,
                 "letter budget for braid verification (env VERIFY_WORD_BUDGET)")
      ->envname("VERIFY_WORD_BUDGET");

  auto* chain = app.add_subcommand("chain", "braid chain relation and full-twist centrality");
  chain->fallthrough();
  long long chain_k = 0;
  chain->add_option("--k", chain_k, "verify a single chain length k");
  long long chain_max_k = 4;
  chain->add_option("--max-k", chain_max_k, "verify k = 1..K (default 4)");

  auto* root = app.add_subcommand("root", "root identity in the exponent calculus");
  root->fallthrough();
  long long root_g = 0;
  root->add_option("--g", root_g, "verify a single genus g");
  long long root_max_g = 6;
  root->add_option("--max-g", root_max_g, "verify g = 2..G (default 6)");

  auto* half = app.add_subcommand("half-twist", "half-twist root witnesses and ledgers");
  half->fallthrough();
  long long half_n = 0;
  half->add_option("--n", half_n, "verify a single marked-point count n");
  long long half_max_n = 12;
  half->add_option("--max-n", half_max_n, "verify n = 5..N (default 12)");

  auto* symplectic = app.add_subcommand("symplectic", "homological chain relation and root");
  symplectic->fallthrough();
  long long symplectic_g = 0;
  symplectic->add_option("--g", symplectic_g, "verify a single genus g");
  long long symplectic_max_g = 6;
  symplectic->add_option("--max-g", symplectic_max_g, "verify g = 2..G (default 6)");

  auto* cube = app.add_subcommand("paper-cube", "4x4 cube root of an elementary matrix");
  cube->fallthrough();

  auto* nielsen = app.add_subcommand("nielsen", "free-group Nielsen transformation roots");
  nielsen->fallthrough();
  long long nielsen_n = 0;
  nielsen->add_option("--n", nielsen_n, "verify a single rank n");
  long long nielsen_max_n = 8;
  nielsen->add_option("--max-n", nielsen_max_n, "verify n = 3..N (default 8)");

  auto* nielsen_matrix =
      app.add_subcommand("nielsen-matrix", "elementary matrix roots in SL(n,Z)");
  nielsen_matrix->fallthrough();
  long long nielsen_matrix_n = 0;
  nielsen_matrix->add_option("--n", nielsen_matrix_n, "verify a single dimension n");
  long long nielsen_matrix_max_n = 10;
  nielsen_matrix->add_option("--max-n", nielsen_matrix_max_n, "verify n = 3..N (default 10)");

  auto* sl2 = app.add_subcommand("sl2", "exhaustive SL(2,Z) root search (expected empty)");
  sl2->fallthrough();
  long long sl2_bound = 20;
  sl2->add_option("--bound", sl2_bound, "entry bound (default 20)");
  long long sl2_max_power = 6;
  sl2->add_option("--max-power", sl2_max_power, "largest exponent tried (default 6)");

  auto* polygon = app.add_subcommand("polygon", "polygon gluing and rotation invariants");
  polygon->fallthrough();
  long long polygon_g = 0;
  polygon->add_option("--g", polygon_g, "verify a single genus parameter g");
  long long polygon_max_g = 12;
  polygon->add_option("--max-g", polygon_max_g, "verify g = 2..G (default 12)");

  auto* all = app.add_subcommand("all", "run the full battery");
  all->fallthrough();
  long long all_max_g = 6;
  all->add_option("--max-g", all_max_g, "genus range 2..G (default 6)");
  long long all_max_n = 10;
  all->add_option("--max-n", all_max_n, "rank / marked-point range (default 10)");
  long long all_max_k = 4;
  all->add_option("--max-k", all_max_k, "chain length range 1..K (default 4)");
  long long all_bound = 20;
  all->add_option("--bound", all_bound, "SL(2,Z) search entry bound (default 20)");
  long long all_max_power = 6;
  all->add_option("--max-power", all_max_power, "SL(2,Z) search exponent cap (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (jobs < 1) return usage_error("--jobs must be >= 1");
  if (word_budget < 1) return usage_error("--word-budget must be >= 1");
  twistroot::LetterBudget budget{static_cast<std::size_t>(word_budget)};

  std::vector<twistroot::Task> tasks;
  try {
    if (chain->parsed()) {
      if (chain->count("--k") > 0) {
        if (chain_k < 1) return usage_error("chain --k must be >= 1");
        append(tasks, twistroot::chain_tasks(chain_k, chain_k, budget));
      } else {
        if (chain_max_k < 1) return usage_error("chain --max-k must be >= 1");
        append(tasks, twistroot::chain_tasks(1, chain_max_k, budget));
      }
    }
    if (root->parsed()) {
      if (root->count("--g") > 0) {
        if (root_g < 2) return usage_error("root --g must be >= 2");
        append(tasks, twistroot::root_tasks(root_g, root_g));
      } else {
        if (root_max_g < 2) return usage_error("root --max-g must be >= 2");
        append(tasks, twistroot::root_tasks(2, root_max_g));
      }
    }
    if (half->parsed()) {
      if (half->count("--n") > 0) {
        if (half_n < 5) return usage_error("half-twist --n must be >= 5");
        append(tasks, twistroot::half_twist_tasks(half_n, half_n));
      } else {
        if (half_max_n < 5) return usage_error("half-twist --max-n must be >= 5");
        append(tasks, twistroot::half_twist_tasks(5, half_max_n));
      }
    }
    if (symplectic->parsed()) {
      if (symplectic->count("--g") > 0) {
        if (symplectic_g < 2) return usage_error("symplectic --g must be >= 2");
        append(tasks, twistroot::symplectic_tasks(symplectic_g, symplectic_g));
      } else {
        if (symplectic_max_g < 2) return usage_error("symplectic --max-g must be >= 2");
        append(tasks, twistroot::symplectic_tasks(2, symplectic_max_g));
      }
    }
    if (cube->parsed()) append(tasks, twistroot::paper_cube_tasks());
    if (nielsen->parsed()) {
      if (nielsen->count("--n") > 0) {
        if (nielsen_n < 3) return usage_error("nielsen --n must be >= 3");
        append(tasks, twistroot::nielsen_tasks(nielsen_n, nielsen_n));
      } else {
        if (nielsen_max_n < 3) return usage_error("nielsen --max-n must be >= 3");
        append(tasks, twistroot::nielsen_tasks(3, nielsen_max_n));
      }
    }
    if (nielsen_matrix->parsed()) {
      if (nielsen_matrix->count("--n") > 0) {
        if (nielsen_matrix_n < 3) return usage_error("nielsen-matrix --n must be >= 3");
        append(tasks, twistroot::nielsen_matrix_tasks(nielsen_matrix_n, nielsen_matrix_n));
      } else {
        if (nielsen_matrix_max_n < 3) return usage_error("nielsen-matrix --max-n must be >= 3");
        append(tasks, twistroot::nielsen_matrix_tasks(3, nielsen_matrix_max_n));
      }
    }
    if (sl2->parsed()) {
      if (sl2_bound < 1) return usage_error("sl2 --bound must be >= 1");
      if (sl2_max_power < 2) return usage_error("sl2 --max-power must be >= 2");
      append(tasks, twistroot::sl2_tasks(sl2_bound, sl2_max_power));
    }
    if (polygon->parsed()) {
      if (polygon->count("--g") > 0) {
        if (polygon_g < 2) return usage_error("polygon --g must be >= 2");
        append(tasks, twistroot::polygon_tasks(polygon_g, polygon_g));
      } else {
        if (polygon_max_g < 2) return usage_error("polygon --max-g must be >= 2");
        append(tasks, twistroot::polygon_tasks(2, polygon_max_g));
      }
    }
    if (all->parsed()) {
      if (all_max_g < 2) return usage_error("all --max-g must be >= 2");
      if (all_max_n < 3) return usage_error("all --max-n must be >= 3");
      if (all_max_k < 1) return usage_error("all --max-k must be >= 1");
      if (all_bound < 1) return usage_error("all --bound must be >= 1");
      if (all_max_power < 2) return usage_error("all --max-power must be >= 2");
      append(tasks, twistroot::chain_tasks(1, all_max_k, budget));
      append(tasks, twistroot::root_tasks(2, all_max_g));
      if (all_max_n >= 5) append(tasks, twistroot::half_twist_tasks(5, all_max_n));
      append(tasks, twistroot::symplectic_tasks(2, all_max_g));
      append(tasks, twistroot::paper_cube_tasks());
      append(tasks, twistroot::nielsen_tasks(3, all_max_n));
      append(tasks, twistroot::nielsen_matrix_tasks(3, all_max_n));
      append(tasks, twistroot::sl2_tasks(all_bound, all_max_power));
      append(tasks, twistroot::polygon_tasks(2, all_max_g));
    }
  } catch (const twistroot::Error& e) {
    return usage_error(e.what());
  }

  const auto records = twistroot::run_tasks(tasks, static_cast<std::size_t>(jobs));

  std::size_t passed = 0, failed = 0, errored = 0;
  for (const auto& r : records) {
    if (json) {
      std::cout << twistroot::to_json(r).dump() << '\n';
    } else {
      std::cout << twistroot::human_line(r) << '\n';
    }
    switch (r.status) {
      case twistroot::VerificationRecord::Status::pass: ++passed; break;
      case twistroot::VerificationRecord::Status::fail: ++failed; break;
      case twistroot::VerificationRecord::Status::error: ++errored; break;
    }
  }
  if (!json) {
    std::cout << records.size() << " checks: " << passed << " passed, " << failed
              << " failed, " << errored << " errors\n";
  }
  return twistroot::all_passed(records) ? 0 : 1;
}
