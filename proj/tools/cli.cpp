#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "evenum/conflicts.hpp"
#include "evenum/es_enum.hpp"
#include "evenum/oracle.hpp"
#include "evenum/order_enum.hpp"
#include "evenum/output.hpp"

namespace evenum::cli {

namespace {

constexpr std::size_t kVerifyLimit = 4;
constexpr std::size_t kOeisDefaultCeiling = 6;
constexpr std::size_t kOeisLongCeiling = 7;
constexpr std::size_t kBenchLimit = 6;

enum class Kind { Preorders, Posets, EventStructures };

const std::map<std::string, Kind> kKinds{
    {"preorders", Kind::Preorders}, {"posets", Kind::Posets}, {"es", Kind::EventStructures}};

const std::map<std::string, Kind> kSequences{
    {"A000798", Kind::Preorders}, {"A001035", Kind::Posets}, {"A284276", Kind::EventStructures}};

const std::map<std::string, DedupePolicy> kDedupe{{"dedupe-naive", DedupePolicy::None},
                                                  {"dedupe-late", DedupePolicy::AfterConcat},
                                                  {"dedupe-final", DedupePolicy::PerGroup}};

const std::map<std::string, PivotRule> kPivot{{"pivot-naive", PivotRule::FirstMinimal},
                                              {"pivot-heuristic", PivotRule::MostSuccessors}};

struct Settings {
  std::string kind;
  std::size_t n = 0;
  unsigned workers = 0;
  bool quiet = false;

  std::string format = "pairs";
  bool canonical = false;
  std::string outPath;

  std::string sequence;
  std::size_t maxN = 0;
  std::size_t offset = 0;
  bool allowLong = false;

  std::vector<std::string> dedupe{"dedupe-naive", "dedupe-late", "dedupe-final"};
  std::vector<std::string> pivot{"pivot-naive", "pivot-heuristic"};
  bool json = false;
};

ProgressFn stderrProgress(std::ostream& err, bool quiet) {
  if (quiet) return {};
  auto lastPercent = std::make_shared<int>(-1);
  return [&err, lastPercent](std::uint64_t done, std::uint64_t total) {
    if (total < 100000) return;
    const int percent = static_cast<int>(done * 100 / total);
    if (percent == *lastPercent) return;
    *lastPercent = percent;
    err << "\rposets processed: " << done << " / " << total << std::flush;
    if (done == total) err << '\n';
  };
}

std::uint64_t countKind(Kind kind, std::size_t n, const CountOptions& options) {
  switch (kind) {
    case Kind::Preorders:
      return countPreorders(n);
    case Kind::Posets:
      return countPosets(n);
    case Kind::EventStructures:
      return countEventStructures(n, options);
  }
  return 0;
}

int cmdCount(const Settings& s, std::ostream& out, std::ostream& err) {
  CountOptions options;
  options.workers = s.workers;
  options.progress = stderrProgress(err, s.quiet);
  out << countKind(kKinds.at(s.kind), s.n, options) << '\n';
  return kSuccess;
}

void streamRecords(Kind kind, std::size_t n, const std::function<void(const OutputRecord&)>& emit) {
  switch (kind) {
    case Kind::Preorders:
      forEachPreorder(n, [&](const BoolMatrix& m) { emit(makeRecord(n, {matrixToRel(m), {}})); });
      break;
    case Kind::Posets:
      forEachPosetMatrix(n, [&](const BoolMatrix& m) { emit(makeRecord(n, {matrixToRel(m), {}})); });
      break;
    case Kind::EventStructures:
      forEachEventStructure(n, [&](const EventStructure& es) { emit(makeRecord(n, es)); });
      break;
  }
}

int cmdEnumerate(const Settings& s, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.outPath.empty()) {
    file.open(s.outPath);
    if (!file) {
      err << "error: cannot write to " << s.outPath << '\n';
      return kUsageError;
    }
    sink = &file;
  }

  std::size_t index = 0;
  auto write = [&](const OutputRecord& r) {
    if (s.format == "pairs") {
      *sink << formatPairs(r) << '\n';
    } else if (s.format == "jsonl") {
      *sink << formatJsonLine(r) << '\n';
    } else {
      *sink << formatDot(r, index);
    }
    ++index;
  };

  const Kind kind = kKinds.at(s.kind);
  if (s.canonical) {
    std::vector<OutputRecord> records;
    streamRecords(kind, s.n, [&](const OutputRecord& r) { records.push_back(r); });
    std::sort(records.begin(), records.end(), canonicalLess);
    for (const auto& r : records) write(r);
  } else {
    streamRecords(kind, s.n, write);
  }
  sink->flush();
  if (!*sink) {
    err << "error: failed writing output\n";
    return kUsageError;
  }
  return kSuccess;
}

template <typename Set>
bool sameSet(const Set& expected, const std::vector<typename Set::value_type>& actual) {
  return actual.size() == expected.size() && Set(actual.begin(), actual.end()) == expected;
}

int cmdVerify(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.n > kVerifyLimit) {
    err << "refused: verify is limited to n <= " << kVerifyLimit << " (brute-force oracle)\n";
    return kGuardRefusal;
  }
  const std::size_t n = s.n;
  bool allPassed = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    allPassed = allPassed && ok;
  };

  std::vector<Rel> preorders;
  for (const auto& m : enumeratePreorders(n)) preorders.push_back(matrixToRel(m));
  report("preorders n=" + std::to_string(n), sameSet(oracle::bruteForcePreorders(n, kVerifyLimit), preorders));

  const std::vector<Rel> posets = enumeratePosets(n);
  report("posets n=" + std::to_string(n), sameSet(oracle::bruteForcePosets(n, kVerifyLimit), posets));

  bool conflictsOk = true;
  for (const Rel& p : posets) conflictsOk = conflictsOk && sameSet(oracle::bruteForceConflicts(p), allowedConflicts(p));
  report("conflicts for " + std::to_string(posets.size()) + " posets", conflictsOk);

  const auto expected = oracle::bruteForceEventStructures(n, kVerifyLimit);
  report("event structures n=" + std::to_string(n) + " (" + std::to_string(expected.size()) + ")",
         sameSet(expected, enumerateEventStructures(n)) && countEventStructures(n) == expected.size());

  return allPassed ? kSuccess : kVerificationFailure;
}

int cmdOeis(const Settings& s, std::ostream& out, std::ostream& err) {
  const std::size_t ceiling = s.allowLong ? kOeisLongCeiling : kOeisDefaultCeiling;
  if (s.maxN > ceiling) {
    err << "refused: --max-n " << s.maxN << " exceeds " << ceiling
        << (s.allowLong ? "" : " (pass --allow-long for up to 7)") << '\n';
    return kGuardRefusal;
  }
  CountOptions options;
  options.workers = s.workers;
  options.progress = stderrProgress(err, s.quiet);
  const Kind kind = kSequences.at(s.sequence);
  for (std::size_t n = s.offset; n <= s.maxN; ++n) out << n << ' ' << countKind(kind, n, options) << '\n';
  return kSuccess;
}

int cmdBench(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.n > kBenchLimit) {
    err << "refused: bench is limited to n <= " << kBenchLimit << '\n';
    return kGuardRefusal;
  }
  struct Result {
    std::string dedupe;
    std::string pivot;
    std::uint64_t count;
    double seconds;
  };
  std::vector<Result> results;
  for (const auto& d : s.dedupe) {
    for (const auto& p : s.pivot) {
      CountOptions options;
      options.workers = 1;
      options.conflicts.dedupe = kDedupe.at(d);
      options.conflicts.pivot = kPivot.at(p);
      const auto start = std::chrono::steady_clock::now();
      const std::uint64_t count = countEventStructures(s.n, options);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      results.push_back({d, p, count, elapsed.count()});
    }
  }
  const bool consistent = std::all_of(results.begin(), results.end(),
                                      [&](const Result& r) { return r.count == results.front().count; });

  if (s.json) {
    nlohmann::json j;
    j["n"] = s.n;
    j["consistent"] = consistent;
    j["variants"] = nlohmann::json::array();
    for (const auto& r : results) {
      j["variants"].push_back({{"dedupe", r.dedupe}, {"pivot", r.pivot}, {"count", r.count}, {"seconds", r.seconds}});
    }
    out << j.dump() << '\n';
  } else {
    out << std::left << std::setw(14) << "dedupe" << std::setw(17) << "pivot" << std::setw(14) << "count"
        << "seconds\n";
    for (const auto& r : results) {
      out << std::left << std::setw(14) << r.dedupe << std::setw(17) << r.pivot << std::setw(14) << r.count
          << std::fixed << std::setprecision(4) << r.seconds << '\n';
    }
  }
  if (!consistent) {
    err << "error: variants disagree on the count\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and count labeled preorders, posets and event structures", "evenum"};
  app.require_subcommand(1);
  Settings s;

  auto nRange = CLI::Range(std::size_t{0}, kMaxEvents);
  auto kindCheck = CLI::IsMember({"preorders", "posets", "es"});

  auto* count = app.add_subcommand("count", "Print the number of structures over n events");
  count->add_option("kind", s.kind, "preorders, posets or es")->required()->check(kindCheck);
  count->add_option("--n", s.n, "Number of events")->required()->check(nRange);
  count->add_option("--workers", s.workers, "Counting threads (0 = all cores)");
  count->add_flag("--quiet", s.quiet, "No progress on stderr");

  auto* enumerate = app.add_subcommand("enumerate", "Print every structure over n events");
  enumerate->add_option("kind", s.kind, "preorders, posets or es")->required()->check(kindCheck);
  enumerate->add_option("--n", s.n, "Number of events")->required()->check(nRange);
  enumerate->add_option("--format", s.format, "pairs, jsonl or dot")->check(CLI::IsMember({"pairs", "jsonl", "dot"}));
  enumerate->add_flag("--canonical", s.canonical, "Sort records by (causality, conflict)");
  enumerate->add_option("--out", s.outPath, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the enumerators against brute force");
  verify->add_option("--n", s.n, "Number of events")->required();

  auto* oeis = app.add_subcommand("oeis", "Print an OEIS b-file");
  oeis->add_option("sequence", s.sequence, "A000798, A001035 or A284276")
      ->required()
      ->check(CLI::IsMember({"A000798", "A001035", "A284276"}));
  oeis->add_option("--max-n", s.maxN, "Last index")->required();
  oeis->add_option("--offset", s.offset, "First index")->default_val(0);
  oeis->add_flag("--allow-long", s.allowLong, "Allow n = 7");
  oeis->add_option("--workers", s.workers, "Counting threads (0 = all cores)");
  oeis->add_flag("--quiet", s.quiet, "No progress on stderr");

  auto* bench = app.add_subcommand("bench", "Time the dedupe and pivot variants");
  bench->add_option("--n", s.n, "Number of events")->required();
  bench->add_option("--dedupe", s.dedupe, "Dedupe variants")
      ->check(CLI::IsMember({"dedupe-naive", "dedupe-late", "dedupe-final"}));
  bench->add_option("--pivot", s.pivot, "Pivot variants")->check(CLI::IsMember({"pivot-naive", "pivot-heuristic"}));
  bench->add_flag("--json", s.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (oeis->parsed() && s.offset > s.maxN) {
    err << "error: --offset exceeds --max-n\n";
    return kUsageError;
  }

  try {
    if (count->parsed()) return cmdCount(s, out, err);
    if (enumerate->parsed()) return cmdEnumerate(s, out, err);
    if (verify->parsed()) return cmdVerify(s, out, err);
    if (oeis->parsed()) return cmdOeis(s, out, err);
    if (bench->parsed()) return cmdBench(s, out, err);
  } catch (const oracle::GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kGuardRefusal;
  }
  return kUsageError;
}

}  // namespace evenum::cli
