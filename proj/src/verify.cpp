#include "riders/verify.hpp"

#include <exception>
#include <numeric>

#include "riders/board_lines.hpp"

namespace riders {
namespace {

struct Instance {
  Move move;
  BoardRect board;
  std::int64_t q = 0;
};

struct Outcome {
  std::vector<std::string> failures;
  bool oracle_checked = false;
};

Outcome check(const Instance& job, const SweepOptions& options) {
  Outcome out;
  const std::string where = "move=" + to_string(job.move) + " board=" + to_string(job.board) +
                            " q=" + std::to_string(job.q);
  auto bump = [&](Method method, Integer value) {
    if (options.corrupt == method) value += 1;
    return CountResult{std::move(value), method};
  };
  try {
    const OrientedInstance inst = orient(job.move, job.board);
    const LineMultiset lines = line_multiset_closed(inst);
    if (job.q == 0) {
      const LineMultiset walked = line_multiset_geometric(job.move, job.board);
      if (walked != lines) {
        out.failures.push_back("FAIL lines " + where + ": closed=" + to_string(lines) +
                               " geometric=" + to_string(walked));
      }
    }
    std::vector<CountResult> results{bump(Method::elementary, count_elementary(job.q, lines)),
                                     bump(Method::partition, count_partition(job.q, lines)),
                                     bump(Method::stirling, count_stirling(job.q, inst))};
    if (within_budget(job.q, job.board, options.oracle_budget)) {
      results.push_back(bump(Method::oracle, brute_force_count(job.q, Moveset({job.move}), job.board,
                                                               options.oracle_budget)));
      out.oracle_checked = true;
    }
    for (const auto& r : results) {
      if (r.value != results.front().value) {
        out.failures.push_back("FAIL " + std::string(MethodDisagreement(where, results).what()));
        break;
      }
    }
  } catch (const std::exception& e) {
    out.failures.push_back("FAIL " + where + ": " + e.what());
  }
  return out;
}

}  // namespace

std::vector<Move> basic_moves(std::int64_t max_c, std::int64_t max_d, bool ordered_only) {
  std::vector<Move> out;
  for (std::int64_t c = 0; c <= max_c; ++c) {
    for (std::int64_t d = 0; d <= max_d; ++d) {
      if ((c == 0 && d == 0) || std::gcd(c, d) != 1) continue;
      if (ordered_only && c > d) continue;
      out.push_back({c, d});
    }
  }
  return out;
}

SweepReport run_sweep(const SweepOptions& options) {
  std::vector<Instance> jobs;
  for (const Move& move : basic_moves(options.max_c, options.max_d, options.ordered_moves_only)) {
    for (std::int64_t m = 1; m <= options.max_m; ++m) {
      for (std::int64_t n = 1; n <= options.max_n; ++n) {
        for (std::int64_t q = 0; q <= options.max_q; ++q) jobs.push_back({move, {m, n}, q});
      }
    }
  }

  std::vector<Outcome> outcomes(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      outcomes[static_cast<std::size_t>(i)] = check(jobs[static_cast<std::size_t>(i)], options);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      outcomes[static_cast<std::size_t>(i)] = check(jobs[static_cast<std::size_t>(i)], options);
    }
  }

  SweepReport report;
  report.instances = count;
  for (auto& outcome : outcomes) {
    report.oracle_checks += outcome.oracle_checked ? 1 : 0;
    for (auto& f : outcome.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace riders
