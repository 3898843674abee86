#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "riders/board_lines.hpp"
#include "riders/counting.hpp"
#include "riders/error.hpp"
#include "riders/quasipoly.hpp"
#include "riders/verify.hpp"

namespace riders::cli {
namespace {

using nlohmann::ordered_json;

std::int64_t parse_int64(std::string_view text, std::string_view what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  const std::string owned(text);
  try {
    value = std::stoll(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (owned.empty() || used != owned.size()) {
    throw InputError("cannot parse " + std::string(what) + " from '" + owned + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view text, std::string_view what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("expected " + std::string(what) + " as 'a,b', got '" + std::string(text) + "'");
  return {parse_int64(parts[0], what), parse_int64(parts[1], what)};
}

enum class Format { json, csv };

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InputError("unknown format '" + name + "' (expected json or csv)");
}

// Resolved output target for one command.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InputError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

ordered_json move_json(const Move& move) { return ordered_json::array({move.c, move.d}); }
ordered_json board_json(const BoardRect& board) { return ordered_json::array({board.m, board.n}); }

ordered_json document(ordered_json query, ordered_json result, std::string_view method,
                      const std::vector<std::string>& errata, const std::vector<std::string>& notes = {}) {
  ordered_json doc;
  doc["query"] = std::move(query);
  doc["result"] = std::move(result);
  doc["method"] = method;
  doc["errata_notes"] = errata;
  if (!notes.empty()) doc["notes"] = notes;
  return doc;
}

OracleBudget budget_from(const std::string& flag) {
  OracleBudget budget;
  if (!flag.empty()) {
    budget.max_configurations = parse_integer(flag);
  } else if (const char* env = std::getenv("RIDER_ORACLE_BUDGET"); env != nullptr && *env != '\0') {
    budget.max_configurations = parse_integer(env);
  }
  if (budget.max_configurations <= 0) throw InputError("oracle budget must be positive");
  return budget;
}

// Canonical move plus a note when the sign was dropped.
Move canonical_with_note(const Move& move, std::vector<std::string>& notes) {
  const Move canonical = canonicalize_move(move.c, move.d);
  if (!(canonical == move)) notes.push_back("move " + to_string(move) + " reflected to " + to_string(canonical));
  return canonical;
}

struct CommonFlags {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "json or csv")->capture_default_str();
  cmd->add_option("--output", flags.output, "write to this file instead of standard output");
}

// ---- lines ----

struct LinesArgs {
  std::string move;
  std::string board;
  CommonFlags common;
};

int cmd_lines(const LinesArgs& args, std::ostream& out) {
  const Format format = parse_format(args.common.format);
  const Move move = parse_move(args.move);
  const BoardRect board = parse_board(args.board);
  std::vector<std::string> notes;
  const Move canonical = canonical_with_note(move, notes);
  const OrientedInstance inst = orient(canonical, board);
  const LineMultiset lines = line_multiset_closed(inst);

  Sink sink(out, args.common.output);
  if (format == Format::csv) {
    sink.stream() << "size,multiplicity\n";
    for (const auto& [size, mult] : lines.entries()) sink.stream() << size << "," << mult << "\n";
    return kSuccess;
  }
  ordered_json entries = ordered_json::array();
  for (const auto& [size, mult] : lines.entries()) {
    entries.push_back({{"size", std::to_string(size)}, {"multiplicity", std::to_string(mult)}});
  }
  ordered_json result;
  result["lines"] = std::move(entries);
  result["line_count"] = std::to_string(lines.line_count());
  result["checksum"] = to_string(lines.cell_count());
  result["oriented"] = {{"c", inst.c}, {"d", inst.d},     {"m", inst.m},         {"n", inst.n},
                        {"s", inst.s}, {"nbar", inst.nbar}, {"swapped", inst.swapped}, {"move_fits", inst.move_fits}};
  ordered_json query{{"command", "lines"}, {"move", move_json(move)}, {"board", board_json(board)}};
  sink.stream() << document(std::move(query), std::move(result), "closed", {}, notes).dump(2) << "\n";
  return kSuccess;
}

// ---- count ----

struct CountArgs {
  std::int64_t pieces = 0;
  std::string move;
  std::string moves;
  std::string board;
  std::string method = "auto";
  std::string oracle_budget;
  std::string inject_fault;
  CommonFlags common;
};

Method parse_fault(const std::string& name) {
  for (auto method : {Method::elementary, Method::partition, Method::stirling, Method::two_piece,
                      Method::semirook, Method::semibishop, Method::oracle}) {
    if (name == to_string(method)) return method;
  }
  throw InputError("--inject-fault expects a counting method name");
}

// Test fixture: adds one to the named route's value.
void inject(std::vector<CountResult>& results, const std::string& fault) {
  if (fault.empty()) return;
  const Method target = parse_fault(fault);
  for (auto& r : results) {
    if (r.method == target) r.value += 1;
  }
}

int emit_count(const CountArgs& args, std::ostream& out, std::ostream& err, const ordered_json& query,
               const std::vector<CountResult>& results, std::string_view method,
               const std::vector<std::string>& errata, const std::vector<std::string>& notes) {
  bool agree = true;
  for (const auto& r : results) agree = agree && r.value == results.front().value;

  Sink sink(out, args.common.output);
  if (parse_format(args.common.format) == Format::csv) {
    sink.stream() << "method,count\n";
    for (const auto& r : results) sink.stream() << to_string(r.method) << "," << to_string(r.value) << "\n";
  } else {
    ordered_json result;
    result["count"] = to_string(results.front().value);
    if (results.size() > 1) {
      ordered_json per_method = ordered_json::object();
      for (const auto& r : results) per_method[std::string(to_string(r.method))] = to_string(r.value);
      result["methods"] = std::move(per_method);
      result["agree"] = agree;
    }
    sink.stream() << document(query, std::move(result), method, errata, notes).dump(2) << "\n";
  }
  if (!agree) {
    std::ostringstream diag;
    diag << "counting methods disagree for pieces=" << args.pieces << " board=" << args.board << ":";
    for (const auto& r : results) diag << " " << to_string(r.method) << "=" << to_string(r.value);
    err << diag.str() << "\n";
    return kMethodDisagreement;
  }
  return kSuccess;
}

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  parse_format(args.common.format);
  if (args.pieces < 0) throw InputError("--pieces must be nonnegative");
  if (args.move.empty() == args.moves.empty()) throw InputError("give exactly one of --move or --moves");
  const BoardRect board = parse_board(args.board);
  validate_board(board);
  const MethodChoice choice = parse_method_choice(args.method);
  const OracleBudget budget = budget_from(args.oracle_budget);
  const std::vector<Move> moves = args.move.empty() ? parse_moves(args.moves) : std::vector<Move>{parse_move(args.move)};
  const Moveset moveset(moves);

  ordered_json query{{"command", "count"}, {"pieces", args.pieces}};
  ordered_json move_list = ordered_json::array();
  for (const auto& m : moves) move_list.push_back(move_json(m));
  query["moves"] = std::move(move_list);
  query["board"] = board_json(board);
  query["method"] = args.method;

  std::vector<std::string> notes;
  std::vector<std::string> errata;
  if (moves.size() > 1) {
    if (args.pieces != 2) {
      throw UnsupportedQuery("pieces=" + std::to_string(args.pieces) +
                             " with several moves is unsupported; only two pieces have a closed form");
    }
    if (choice != MethodChoice::automatic && choice != MethodChoice::all && choice != MethodChoice::oracle) {
      throw UnsupportedQuery("method '" + args.method + "' applies to one-move riders only");
    }
    std::vector<CountResult> results;
    if (choice != MethodChoice::oracle) {
      results.push_back({count_two_pieces(moveset, board), Method::two_piece});
      errata = {std::string(kAlpha2Note), std::string(kTwoPieceNote)};
    }
    if (choice == MethodChoice::oracle || (choice == MethodChoice::all && within_budget(2, board, budget))) {
      results.push_back({brute_force_count(2, moveset, board, budget), Method::oracle});
    }
    inject(results, args.inject_fault);
    const std::string_view method = choice == MethodChoice::all ? "all" : to_string(results.front().method);
    return emit_count(args, out, err, query, results, method, errata, notes);
  }

  canonical_with_note(moves.front(), notes);
  if (choice == MethodChoice::all) {
    auto results = count_all(args.pieces, moves.front(), board, budget);
    inject(results, args.inject_fault);
    for (const auto& r : results) {
      if (r.method == Method::two_piece) errata = {std::string(kAlpha2Note), std::string(kTwoPieceNote)};
    }
    return emit_count(args, out, err, query, results, "all", errata, notes);
  }
  std::vector<CountResult> results{count(args.pieces, moves.front(), board, choice, budget)};
  inject(results, args.inject_fault);
  return emit_count(args, out, err, query, results, to_string(results.front().method), errata, notes);
}

// ---- period ----

struct PeriodArgs {
  std::string move;
  std::int64_t pieces = 0;
  std::int64_t valid_from = 0;
  CommonFlags common;
};

int cmd_period(const PeriodArgs& args, std::ostream& out) {
  const Format format = parse_format(args.common.format);
  if (args.pieces < 1) throw InputError("--pieces must be at least 1");
  const Move move = parse_move(args.move);
  std::vector<std::string> notes;
  const Move canonical = canonical_with_note(move, notes);
  FitOptions options;
  if (args.valid_from > 0) options.valid_from = args.valid_from;
  const Quasipolynomial qp = fit_square_board(canonical, args.pieces, options);
  const std::int64_t minimal = minimal_period(qp);
  const bool exact = minimal == qp.period;
  if (args.pieces == 1 && !exact) notes.push_back(std::string(kPeriodOneNote));

  Sink sink(out, args.common.output);
  if (format == Format::csv) {
    sink.stream() << "residue,power,coefficient\n";
    for (std::size_t r = 0; r < qp.constituents.size(); ++r) {
      const auto& coeffs = qp.constituents[r].coefficients();
      for (std::size_t i = 0; i < coeffs.size(); ++i) sink.stream() << r << "," << i << "," << to_string(coeffs[i]) << "\n";
    }
    return kSuccess;
  }
  ordered_json constituents = ordered_json::array();
  for (std::size_t r = 0; r < qp.constituents.size(); ++r) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : qp.constituents[r].coefficients()) coeffs.push_back(to_string(c));
    constituents.push_back({{"residue", r}, {"coefficients", std::move(coeffs)}});
  }
  ordered_json result;
  result["period"] = qp.period;
  result["minimal_period"] = minimal;
  result["degree"] = qp.degree;
  result["valid_from"] = qp.valid_from;
  result["minimal_equals_max_cd"] = exact;
  result["constituents"] = std::move(constituents);
  ordered_json query{{"command", "period"}, {"move", move_json(move)}, {"pieces", args.pieces}};
  sink.stream() << document(std::move(query), std::move(result), "elementary", {}, notes).dump(2) << "\n";
  return kSuccess;
}

// ---- verify ----

struct VerifyArgs {
  SweepOptions sweep;
  std::string oracle_budget;
  std::string inject_fault;
  bool serial = false;
};

int cmd_verify(VerifyArgs args, std::ostream& out) {
  for (auto bound : {args.sweep.max_c, args.sweep.max_d, args.sweep.max_q}) {
    if (bound < 0) throw InputError("verify bounds must be nonnegative");
  }
  if (args.sweep.max_m < 1 || args.sweep.max_n < 1) throw InputError("--max-m and --max-n must be at least 1");
  args.sweep.oracle_budget = budget_from(args.oracle_budget);
  if (!args.inject_fault.empty()) args.sweep.corrupt = parse_fault(args.inject_fault);
  args.sweep.parallel = !args.serial;

  const SweepReport report = run_sweep(args.sweep);
  for (const auto& failure : report.failures) out << failure << "\n";
  out << "verify: " << report.instances << " instances, " << report.oracle_checks << " oracle checks, "
      << report.failures.size() << " failures\n";
  return report.ok() ? kSuccess : kVerifyFailed;
}

// ---- table ----

struct TableArgs {
  std::string move;
  std::int64_t pieces = 0;
  std::string m_range;
  std::string n_range;
  CommonFlags common;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
  const Format format = parse_format(args.common.format);
  if (args.pieces < 0) throw InputError("--pieces must be nonnegative");
  const Move move = parse_move(args.move);
  std::vector<std::string> notes;
  canonical_with_note(move, notes);
  const auto [m_lo, m_hi] = parse_range(args.m_range);
  const auto [n_lo, n_hi] = parse_range(args.n_range);
  if (m_lo < 1 || n_lo < 1) throw InputError("table ranges must start at 1 or above");

  Sink sink(out, args.common.output);
  ordered_json rows = ordered_json::array();
  if (format == Format::csv) sink.stream() << "m,n,count\n";
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      const std::string value = to_string(count(args.pieces, move, {m, n}, MethodChoice::automatic).value);
      if (format == Format::csv) {
        sink.stream() << m << "," << n << "," << value << "\n";
      } else {
        rows.push_back({{"m", m}, {"n", n}, {"count", value}});
      }
    }
  }
  if (format == Format::json) {
    ordered_json query{{"command", "table"}, {"move", move_json(move)}, {"pieces", args.pieces},
                       {"m", {m_lo, m_hi}},   {"n", {n_lo, n_hi}}};
    sink.stream() << document(std::move(query), {{"rows", std::move(rows)}}, "elementary", {}, notes).dump(2) << "\n";
  }
  return kSuccess;
}

}  // namespace

Move parse_move(std::string_view text) {
  const auto [c, d] = parse_pair(text, "move");
  return {c, d};
}

std::vector<Move> parse_moves(std::string_view text) {
  std::vector<Move> out;
  for (auto piece : split(text, ';')) {
    if (!piece.empty()) out.push_back(parse_move(piece));
  }
  if (out.empty()) throw InputError("--moves needs at least one 'c,d' pair");
  return out;
}

BoardRect parse_board(std::string_view text) {
  const auto [m, n] = parse_pair(text, "board");
  return {m, n};
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto value = parse_int64(text, "range");
    return {value, value};
  }
  const auto lo = parse_int64(text.substr(0, dots), "range");
  const auto hi = parse_int64(text.substr(dots + 2), "range");
  if (hi < lo) throw InputError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

Integer parse_integer(std::string_view text) {
  Integer value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw InputError("cannot parse integer from '" + std::string(text) + "'");
  }
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of nonattacking rider placements on rectangular boards", "riders"};
  app.require_subcommand(1);

  LinesArgs lines;
  auto* lines_cmd = app.add_subcommand("lines", "line-size multiset of a move on a board");
  lines_cmd->add_option("--move", lines.move, "basic move c,d")->required();
  lines_cmd->add_option("--board", lines.board, "board m,n")->required();
  add_common(lines_cmd, lines.common);

  CountArgs counting;
  auto* count_cmd = app.add_subcommand("count", "number of nonattacking placements");
  count_cmd->add_option("--pieces", counting.pieces, "number of pieces q")->required();
  auto* move_opt = count_cmd->add_option("--move", counting.move, "basic move c,d");
  count_cmd->add_option("--moves", counting.moves, "several moves 'c1,d1;c2,d2'")->excludes(move_opt);
  count_cmd->add_option("--board", counting.board, "board m,n")->required();
  count_cmd->add_option("--method", counting.method, "auto, elementary, partition, stirling, oracle or all")
      ->capture_default_str();
  count_cmd->add_option("--oracle-budget", counting.oracle_budget, "largest C(mn,q) the oracle may enumerate");
  count_cmd->add_option("--inject-fault", counting.inject_fault, "corrupt one route (test fixture)");
  add_common(count_cmd, counting.common);

  PeriodArgs period;
  auto* period_cmd = app.add_subcommand("period", "fit u(q;n,n) as a quasipolynomial and report its period");
  period_cmd->add_option("--move", period.move, "basic move c,d")->required();
  period_cmd->add_option("--pieces", period.pieces, "number of pieces q")->required();
  period_cmd->add_option("--valid-from", period.valid_from, "smallest n sampled (default (q+1)max(c,d))");
  add_common(period_cmd, period.common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check every counting route and the brute-force oracle");
  verify_cmd->add_option("--max-c", verify.sweep.max_c)->capture_default_str();
  verify_cmd->add_option("--max-d", verify.sweep.max_d)->capture_default_str();
  verify_cmd->add_option("--max-m", verify.sweep.max_m)->capture_default_str();
  verify_cmd->add_option("--max-n", verify.sweep.max_n)->capture_default_str();
  verify_cmd->add_option("--max-q", verify.sweep.max_q)->capture_default_str();
  verify_cmd->add_option("--oracle-budget", verify.oracle_budget, "largest C(mn,q) the oracle may enumerate");
  verify_cmd->add_option("--inject-fault", verify.inject_fault, "corrupt one route (test fixture)");
  verify_cmd->add_flag("--serial", verify.serial, "run the sweep on one thread");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "grid of u(q;m,n) over board sizes");
  table_cmd->add_option("--move", table.move, "basic move c,d")->required();
  table_cmd->add_option("--pieces", table.pieces, "number of pieces q")->required();
  table_cmd->add_option("--m", table.m_range, "range a..b for m")->required();
  table_cmd->add_option("--n", table.n_range, "range a..b for n")->required();
  add_common(table_cmd, table.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*lines_cmd) return cmd_lines(lines, out);
    if (*count_cmd) return cmd_count(counting, out, err);
    if (*period_cmd) return cmd_period(period, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*table_cmd) return cmd_table(table, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedQuery& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const MethodDisagreement& e) {
    err << e.what() << "\n";
    return kMethodDisagreement;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << "\n";
    return kRegimeFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kInputError;
}

}  // namespace riders::cli
