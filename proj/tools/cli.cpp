#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bench_workloads.hpp"
#include "lazystreams/lang.hpp"

namespace lazystreams::cli {

namespace {

struct Config {
  std::string expr;
  std::size_t take = 10;
  std::uint64_t seed = 42;
  std::string op = "nat_sum";
  std::size_t bench_size = 1'000'000;
  std::string impl = "both";
};

int run_eval(const Config& cfg, std::ostream& out, std::ostream& err) {
  try {
    ExprPtr e = parse(cfg.expr);
    Generator g = eval_expr(*e, default_env(cfg.seed));
    out << show(cfg.take, g) << '\n';
    return kOk;
  } catch (const LanguageError& ex) {
    err << "error: " << ex.what() << '\n' << "  " << cfg.expr << '\n' << "  " << std::string(ex.position(), ' ') << "^\n";
    return kUsageError;
  }
}

void print_result(const bench::Result& r, std::ostream& out) {
  std::ostringstream eps;
  eps << std::setprecision(6) << r.elements_per_second();
  out << "impl=" << bench::name(r.impl) << " op=" << bench::name(r.op) << " n=" << r.n << " eps=" << eps.str()
      << " peak_bytes=" << r.peak_bytes << " checksum=" << r.checksum << '\n';
}

int run_bench(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto op = bench::parse_op(cfg.op);
  if (!op) {
    err << "error: unknown --op " << cfg.op << '\n';
    return kUsageError;
  }
  std::vector<bench::Impl> impls;
  if (cfg.impl != "lazylist") impls.push_back(bench::Impl::Generator);
  if (cfg.impl != "generator") impls.push_back(bench::Impl::LazyList);

  std::vector<bench::Result> results;
  for (auto impl : impls) results.push_back(bench::run(*op, impl, cfg.bench_size));
  if (results.size() == 2 && results[0].checksum != results[1].checksum) {
    err << "error: checksum mismatch between implementations (" << results[0].checksum << " vs " << results[1].checksum
        << ")\n";
    return kOracleMismatch;
  }
  for (const auto& r : results) print_result(r, out);
  if (results.size() < 2) return kOk;

  const double lazy_eps = results[1].elements_per_second();
  const double ratio = lazy_eps > 0 ? results[0].elements_per_second() / lazy_eps : 0.0;
  out << "ratio generator/lazylist=" << std::setprecision(4) << ratio << '\n';
  if (ratio < 0.5) {
    out << "note: generator more than 2x slower than lazylist\n";
    return kSlowGenerator;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Lazy stream generators: evaluate expressions, replay transcripts, benchmark", "lazystreams"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a generator expression and show its first elements");
  eval->add_option("expr", cfg.expr, "Generator expression, e.g. \"[a,b]*(1:4)\"")->required();
  eval->add_option("--take", cfg.take, "Number of elements to show")->capture_default_str();
  eval->add_option("--seed", cfg.seed, "Seed for the rand stream")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Replay the reference transcripts and check them");

  auto* bench = app.add_subcommand("bench", "Compare generator and lazy-list throughput");
  bench->add_option("--op", cfg.op, "Workload")
      ->check(CLI::IsMember({"nat_sum", "map_chain", "prod_prefix"}))
      ->capture_default_str();
  bench->add_option("--n", cfg.bench_size, "Stream length")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--impl", cfg.impl, "Implementation")
      ->check(CLI::IsMember({"generator", "lazylist", "both"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsageError;
  }

  if (eval->parsed()) return run_eval(cfg, out, err);
  if (demo->parsed()) return run_demo(out);
  return run_bench(cfg, out, err);
}

}  // namespace lazystreams::cli
